#include "idcode/family.hpp"

#include <bit>
#include <stdexcept>

#include "idcode/code_solver.hpp"
#include "idcode/errors.hpp"

namespace idcode {

RootedForest::RootedForest(std::vector<int> parents) : parents_(std::move(parents)) {
  const int n = size();
  for (int v = 0; v < n; ++v) {
    if (parents_[v] < -1 || parents_[v] >= n || parents_[v] == v)
      throw std::invalid_argument("RootedForest: invalid parent entry");
  }
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (int cur = v; parents_[cur] != -1; cur = parents_[cur]) {
      if (++steps > n) throw std::invalid_argument("RootedForest: parent cycle");
    }
  }
}

std::optional<int> RootedForest::parent(int v) const {
  if (v < 0 || v >= size()) throw std::out_of_range("RootedForest: bad vertex");
  return parents_[v] == -1 ? std::nullopt : std::optional<int>(parents_[v]);
}

VertexSet RootedForest::roots() const {
  VertexSet out(size());
  for (int v = 0; v < size(); ++v)
    if (parents_[v] == -1) out.insert(v);
  return out;
}

Digraph RootedForest::as_digraph() const {
  std::vector<Arc> arcs;
  for (int v = 0; v < size(); ++v)
    if (parents_[v] != -1) arcs.push_back({parents_[v], v});
  return Digraph(size(), arcs);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  const int na = a.order();
  std::vector<Arc> arcs = a.arcs();
  for (const Arc& arc : b.arcs()) arcs.push_back({arc.tail + na, arc.head + na});
  return Digraph(na + b.order(), arcs);
}

Digraph apex(const Digraph& d) {
  const int n = d.order();
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count() + n);
  for (int v = 1; v <= n; ++v) arcs.push_back({0, v});
  for (const Arc& arc : d.arcs()) arcs.push_back({arc.tail + 1, arc.head + 1});
  return Digraph(n + 1, arcs);
}

std::optional<RootedForest> recognize_family(const Digraph& d) {
  const int n = d.order();
  if (n == 0) return RootedForest(std::vector<int>{});
  if (has_symmetric_pair(d)) return std::nullopt;
  if (!is_acyclic(d)) return std::nullopt;

  // In a transitive closure of a forest, the in-neighbors of x are exactly
  // its ancestors and their in-balls are strictly nested, so the father is
  // the unique in-neighbor with the largest in-ball. A tie means rejection.
  std::vector<int> parents(n, -1);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t in = d.in_neighbors(v).bits();
    if (in == 0) continue;
    int best = -1, best_size = -1;
    bool tie = false;
    for (std::uint64_t rest = in; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int sz = std::popcount(d.in_ball_bits(u));
      if (sz > best_size) {
        best = u;
        best_size = sz;
        tie = false;
      } else if (sz == best_size) {
        tie = true;
      }
    }
    if (tie) return std::nullopt;
    parents[v] = best;
  }

  RootedForest forest(std::move(parents));  // acyclic: parent arcs follow a DAG
  if (transitive_closure(forest.as_digraph()) != d) return std::nullopt;
  return forest;
}

SeparationWitness family_separation_witness(const Digraph& d, int x) {
  if (x < 0 || x >= d.order())
    throw std::out_of_range("family_separation_witness: bad vertex");
  const auto forest = recognize_family(d);
  if (!forest) throw NotInFamilyError();

  VertexSet code = VertexSet::full(d.order());
  code.erase(x);
  const auto pairs = unseparated_pairs(d, code);

  const auto father = forest->parent(x);
  if (!father) {
    if (!pairs.empty())
      throw std::logic_error("family member: dropping a root must keep separation");
    return {x, std::nullopt};
  }
  const std::pair<int, int> expected{std::min(x, *father), std::max(x, *father)};
  if (pairs.size() != 1 || pairs.front() != expected)
    throw std::logic_error("family member: x and its father must be the unique unseparated pair");
  return {x, father};
}

}  // namespace idcode
