#include "idcode/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace idcode {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// reach[v] = vertices reachable from v along directed paths of length >= 1.
std::vector<std::uint64_t> reachability(const Digraph& d) {
  const int n = d.order();
  std::vector<std::uint64_t> reach(n);
  for (int v = 0; v < n; ++v) reach[v] = d.out_neighbors(v).bits();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint64_t acc = reach[v];
      for (std::uint64_t rest = reach[v]; rest != 0; rest &= rest - 1) {
        acc |= reach[std::countr_zero(rest)];
      }
      if (acc != reach[v]) {
        reach[v] = acc;
        changed = true;
      }
    }
  }
  return reach;
}

}  // namespace

VertexSet::VertexSet(int universe_size, std::uint64_t bits)
    : universe_(universe_size), bits_(bits) {
  if (universe_size < 0 || universe_size > 64)
    throw std::invalid_argument("VertexSet: universe size out of range");
  if ((bits & ~full_mask(universe_size)) != 0)
    throw std::invalid_argument("VertexSet: member outside universe");
}

VertexSet VertexSet::full(int universe_size) {
  return VertexSet(universe_size, full_mask(universe_size));
}

VertexSet VertexSet::of(int universe_size, std::initializer_list<int> members) {
  VertexSet s(universe_size);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe_size, const std::vector<int>& members) {
  VertexSet s(universe_size);
  for (int v : members) s.insert(v);
  return s;
}

int VertexSet::size() const { return std::popcount(bits_); }

void VertexSet::check_index(int v) const {
  if (v < 0 || v >= universe_)
    throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                            " outside universe of size " + std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& rhs) const {
  if (universe_ != rhs.universe_)
    throw std::invalid_argument("VertexSet: universe sizes differ");
}

bool VertexSet::contains(int v) const {
  check_index(v);
  return (bits_ & bit(v)) != 0;
}

VertexSet& VertexSet::insert(int v) {
  check_index(v);
  bits_ |= bit(v);
  return *this;
}

VertexSet& VertexSet::erase(int v) {
  check_index(v);
  bits_ &= ~bit(v);
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& rhs) const {
  check_same_universe(rhs);
  return (bits_ & ~rhs.bits_) == 0;
}

VertexSet VertexSet::complement() const {
  return VertexSet(universe_, bits_ ^ full_mask(universe_));
}

int VertexSet::smallest() const {
  return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : to_vector()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

VertexSet operator&(VertexSet a, const VertexSet& b) {
  a.check_same_universe(b);
  a.bits_ &= b.bits_;
  return a;
}

VertexSet operator|(VertexSet a, const VertexSet& b) {
  a.check_same_universe(b);
  a.bits_ |= b.bits_;
  return a;
}

VertexSet operator-(VertexSet a, const VertexSet& b) {
  a.check_same_universe(b);
  a.bits_ &= ~b.bits_;
  return a;
}

Digraph::Digraph(int n) : n_(n), in_(n, 0), out_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Digraph: order must be in [0, 64]");
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) add_arc_checked(a.tail, a.head);
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("Digraph: vertex " + std::to_string(v) +
                            " outside [0, " + std::to_string(n_) + ")");
}

void Digraph::add_arc_checked(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Digraph: self-loop");
  if (has_arc(u, v)) throw std::invalid_argument("Digraph: duplicate arc");
  out_[u] |= bit(v);
  in_[v] |= bit(u);
  ++arc_count_;
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (out_[u] & bit(v)) != 0;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t rest = out_[u]; rest != 0; rest &= rest - 1)
      out.push_back({u, std::countr_zero(rest)});
  return out;  // already sorted: tails ascending, heads ascending per tail
}

VertexSet Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return VertexSet(n_, in_[v]);
}

VertexSet Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return VertexSet(n_, out_[v]);
}

VertexSet Digraph::in_ball(int v) const {
  check_vertex(v);
  return VertexSet(n_, in_[v] | bit(v));
}

VertexSet Digraph::out_ball(int v) const {
  check_vertex(v);
  return VertexSet(n_, out_[v] | bit(v));
}

std::uint64_t Digraph::in_ball_bits(int v) const {
  check_vertex(v);
  return in_[v] | bit(v);
}

std::uint64_t Digraph::out_ball_bits(int v) const {
  check_vertex(v);
  return out_[v] | bit(v);
}

std::optional<std::pair<int, int>> find_twins(const Digraph& d) {
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (d.in_ball_bits(u) == d.in_ball_bits(v)) return std::make_pair(u, v);
  return std::nullopt;
}

VertexSet sources(const Digraph& d) {
  VertexSet s(d.order());
  for (int v = 0; v < d.order(); ++v)
    if (d.in_neighbors(v).empty()) s.insert(v);
  return s;
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> flipped;
  flipped.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) flipped.push_back({a.head, a.tail});
  return Digraph(d.order(), flipped);
}

Digraph transitive_closure(const Digraph& d) {
  const int n = d.order();
  const auto reach = reachability(d);
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t rest = reach[v] & ~bit(v); rest != 0; rest &= rest - 1)
      arcs.push_back({v, std::countr_zero(rest)});
  }
  return Digraph(n, arcs);
}

Digraph induced_subgraph(const Digraph& d, const VertexSet& keep) {
  if (keep.universe_size() != d.order())
    throw std::invalid_argument("induced_subgraph: universe mismatch");
  const std::vector<int> kept = keep.to_vector();
  std::vector<int> new_index(d.order(), -1);
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) new_index[kept[i]] = i;
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (new_index[a.tail] >= 0 && new_index[a.head] >= 0)
      arcs.push_back({new_index[a.tail], new_index[a.head]});
  return Digraph(static_cast<int>(kept.size()), arcs);
}

bool has_symmetric_pair(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    if ((d.out_neighbors(u).bits() & d.in_neighbors(u).bits()) != 0) return true;
  return false;
}

bool is_acyclic(const Digraph& d) {
  const auto reach = reachability(d);
  for (int v = 0; v < d.order(); ++v)
    if ((reach[v] & bit(v)) != 0) return false;
  return true;
}

}  // namespace idcode
