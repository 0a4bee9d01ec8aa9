#include "idcode/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "idcode/errors.hpp"

namespace idcode {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
}

BipartiteGraph::BipartiteGraph(int s_size, int t_size)
    : s_size_(s_size), t_size_(t_size), adj_(s_size, 0) {
  if (s_size < 0 || s_size > kMaxPart || t_size < 0 || t_size > kMaxPart)
    throw std::invalid_argument("BipartiteGraph: part size must be in [0, 64]");
}

BipartiteGraph::BipartiteGraph(int s_size, int t_size,
                               std::span<const std::pair<int, int>> edges)
    : BipartiteGraph(s_size, t_size) {
  for (const auto& [s, t] : edges) add_edge(s, t);
}

void BipartiteGraph::check_s(int s) const {
  if (s < 0 || s >= s_size_)
    throw std::out_of_range("BipartiteGraph: S-vertex " + std::to_string(s) +
                            " outside [0, " + std::to_string(s_size_) + ")");
}

void BipartiteGraph::check_t(int t) const {
  if (t < 0 || t >= t_size_)
    throw std::out_of_range("BipartiteGraph: T-vertex " + std::to_string(t) +
                            " outside [0, " + std::to_string(t_size_) + ")");
}

bool BipartiteGraph::has_edge(int s, int t) const {
  check_s(s);
  check_t(t);
  return (adj_[s] & bit(t)) != 0;
}

void BipartiteGraph::add_edge(int s, int t) {
  check_s(s);
  check_t(t);
  if ((adj_[s] & bit(t)) != 0)
    throw std::invalid_argument("BipartiteGraph: duplicate edge");
  adj_[s] |= bit(t);
  ++edge_count_;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int s = 0; s < s_size_; ++s)
    for (std::uint64_t rest = adj_[s]; rest != 0; rest &= rest - 1)
      out.emplace_back(s, std::countr_zero(rest));
  return out;
}

VertexSet BipartiteGraph::neighborhood_of_s(int s) const {
  check_s(s);
  return VertexSet(t_size_, adj_[s]);
}

VertexSet BipartiteGraph::neighborhood_of_t(int t) const {
  check_t(t);
  VertexSet out(s_size_);
  for (int s = 0; s < s_size_; ++s)
    if ((adj_[s] & bit(t)) != 0) out.insert(s);
  return out;
}

std::uint64_t BipartiteGraph::adj_bits(int s) const {
  check_s(s);
  return adj_[s];
}

const std::vector<int>& BipartiteGraph::matching() const {
  if (!matching_) throw PreconditionError("BipartiteGraph: no matching designated");
  return *matching_;
}

void BipartiteGraph::set_matching(std::vector<int> t_of_s) {
  if (static_cast<int>(t_of_s.size()) != s_size_)
    throw std::invalid_argument("BipartiteGraph: matching size must equal |S|");
  std::uint64_t used_t = 0;
  for (int s = 0; s < s_size_; ++s) {
    const int t = t_of_s[s];
    if (t == -1) continue;
    if (!has_edge(s, t))
      throw std::invalid_argument("BipartiteGraph: matching pair is not an edge");
    if ((used_t & bit(t)) != 0)
      throw std::invalid_argument("BipartiteGraph: matching reuses a T-vertex");
    used_t |= bit(t);
  }
  matching_ = std::move(t_of_s);
}

bool BipartiteGraph::matching_is_perfect() const {
  if (!matching_ || s_size_ != t_size_) return false;
  for (int t : *matching_)
    if (t == -1) return false;
  return true;  // injectivity was checked on designation, so T is saturated
}

MatchingResult perfect_matching(const BipartiteGraph& g) {
  if (g.s_size() != g.t_size())
    throw PreconditionError("perfect_matching: parts differ in size");
  const int n = g.s_size();
  std::vector<int> match_s(n, -1), match_t(n, -1);
  std::vector<char> visited(n, 0);

  auto augment = [&](auto&& self, int s) -> bool {
    for (std::uint64_t rest = g.adj_bits(s); rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      if (visited[t]) continue;
      visited[t] = 1;
      if (match_t[t] == -1 || self(self, match_t[t])) {
        match_t[t] = s;
        match_s[s] = t;
        return true;
      }
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, s);
  }

  int unmatched = -1;
  for (int s = 0; s < n; ++s)
    if (match_s[s] == -1) {
      unmatched = s;
      break;
    }
  if (unmatched == -1) return MatchingResult{std::move(match_s), std::nullopt};

  // Alternating reachability from the unmatched vertex: every reachable
  // T-vertex is matched, and its partner is reachable, so |N(Z)| = |Z| - 1.
  std::uint64_t z_s = bit(unmatched), w_t = 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::uint64_t nbhd = 0;
    for (std::uint64_t rest = z_s; rest != 0; rest &= rest - 1)
      nbhd |= g.adj_bits(std::countr_zero(rest));
    if (nbhd != w_t) {
      w_t = nbhd;
      changed = true;
    }
    for (std::uint64_t rest = w_t; rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      if (match_t[t] != -1 && (z_s & bit(match_t[t])) == 0) {
        z_s |= bit(match_t[t]);
        changed = true;
      }
    }
  }
  return MatchingResult{std::nullopt,
                        HallViolator{VertexSet(n, z_s), VertexSet(n, w_t)}};
}

}  // namespace idcode
