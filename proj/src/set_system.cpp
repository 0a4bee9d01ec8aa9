#include "idcode/set_system.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "idcode/errors.hpp"

namespace idcode {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::vector<std::uint64_t> masks_of(const SetSystem& sys) {
  std::vector<std::uint64_t> masks;
  masks.reserve(sys.sets.size());
  for (const VertexSet& s : sys.sets) masks.push_back(s.bits());
  return masks;
}

bool distinct_on(const std::vector<std::uint64_t>& masks, std::uint64_t keep) {
  std::uint64_t seen[64];
  int count = 0;
  for (const std::uint64_t m : masks) {
    const std::uint64_t trace = m & keep;
    int pos = count;
    while (pos > 0 && seen[pos - 1] > trace) {
      seen[pos] = seen[pos - 1];
      --pos;
    }
    if (pos > 0 && seen[pos - 1] == trace) return false;
    seen[pos] = trace;
    ++count;
  }
  return true;
}

bool nonempty_on(const std::vector<std::uint64_t>& masks, std::uint64_t keep) {
  for (const std::uint64_t m : masks)
    if ((m & keep) == 0) return false;
  return true;
}

void require_distinct(const SetSystem& sys, const char* op) {
  if (!sys.sets_distinct())
    throw PreconditionError(std::string(op) + ": sets must be pairwise distinct");
}

void require_nonempty(const SetSystem& sys, const char* op) {
  if (!sys.sets_nonempty())
    throw PreconditionError(std::string(op) + ": sets must be nonempty");
}

void require_square(const SetSystem& sys, const char* op) {
  if (sys.set_count() != sys.ground_size)
    throw PreconditionError(std::string(op) +
                            ": the number of sets must equal the ground size");
  if (sys.ground_size < 1)
    throw PreconditionError(std::string(op) + ": empty ground set");
}

// Enumerates perfect matchings of g (|S| = |T| <= limit) in lexicographic
// order of the s -> t assignment, invoking fn until it returns true.
bool for_each_perfect_matching(const BipartiteGraph& g, int limit,
                               const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = g.s_size();
  if (n > limit) throw GuardError("perfect matching enumeration limited to n <= 8");
  std::vector<int> t_of_s(n, -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int s) -> bool {
    if (s == n) return fn(t_of_s);
    for (std::uint64_t rest = g.adj_bits(s) & ~used; rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      t_of_s[s] = t;
      used |= bit(t);
      if (self(self, s + 1)) return true;
      used &= ~bit(t);
      t_of_s[s] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

SetSystem SetSystem::from_masks(int ground_size, std::span<const std::uint64_t> masks) {
  SetSystem sys;
  sys.ground_size = ground_size;
  sys.sets.reserve(masks.size());
  for (const std::uint64_t m : masks) sys.sets.emplace_back(ground_size, m);
  return sys;
}

bool SetSystem::sets_distinct() const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].bits() == sets[j].bits()) return false;
  return true;
}

bool SetSystem::sets_nonempty() const {
  for (const VertexSet& s : sets)
    if (s.empty()) return false;
  return true;
}

int bondy_element(const SetSystem& sys) {
  if (sys.ground_size < 1)
    throw PreconditionError("bondy_element: empty ground set");
  if (sys.set_count() > sys.ground_size)
    throw PreconditionError("bondy_element: more sets than ground elements");
  require_distinct(sys, "bondy_element");
  const auto masks = masks_of(sys);
  const std::uint64_t full = full_mask(sys.ground_size);
  for (int x = 0; x < sys.ground_size; ++x)
    if (distinct_on(masks, full & ~bit(x))) return x;
  throw std::logic_error("bondy_element: no deletable element found");
}

VertexSet bondy_reduce(const SetSystem& sys) {
  if (sys.set_count() < 1)
    throw PreconditionError("bondy_reduce: at least one set required");
  if (sys.set_count() > sys.ground_size)
    throw PreconditionError("bondy_reduce: more sets than ground elements");
  require_distinct(sys, "bondy_reduce");
  const auto masks = masks_of(sys);
  const int target = sys.ground_size - sys.set_count() + 1;
  std::uint64_t removed = 0;
  std::uint64_t keep = full_mask(sys.ground_size);
  for (int step = 0; step < target; ++step) {
    bool found = false;
    for (int x = 0; x < sys.ground_size; ++x) {
      if ((removed & bit(x)) != 0) continue;
      if (distinct_on(masks, keep & ~bit(x))) {
        removed |= bit(x);
        keep &= ~bit(x);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("bondy_reduce: greedy step has no removable element");
  }
  return VertexSet(sys.ground_size, removed);
}

VertexSet bondy_reduce_nonempty(const SetSystem& sys) {
  if (sys.set_count() < 1)
    throw PreconditionError("bondy_reduce_nonempty: at least one set required");
  if (sys.set_count() >= sys.ground_size)
    throw PreconditionError(
        "bondy_reduce_nonempty: strictly more elements than sets required");
  require_distinct(sys, "bondy_reduce_nonempty");
  require_nonempty(sys, "bondy_reduce_nonempty");

  // Start from the distinct-trace removal set; at most one trace is empty.
  // Restoring one element of that set (or any element if none is empty)
  // makes every trace nonempty while distinctness is preserved.
  const VertexSet x0 = bondy_reduce(sys);
  const std::uint64_t keep = x0.complement().bits();
  int restore = -1;
  for (const VertexSet& s : sys.sets) {
    if ((s.bits() & keep) == 0) {
      restore = std::countr_zero(s.bits() & x0.bits());
      break;
    }
  }
  if (restore == -1) restore = x0.smallest();
  VertexSet out = x0;
  out.erase(restore);
  return out;
}

DirectExtremalCheck is_extremal_direct(const SetSystem& sys) {
  require_square(sys, "is_extremal_direct");
  require_distinct(sys, "is_extremal_direct");
  require_nonempty(sys, "is_extremal_direct");
  const auto masks = masks_of(sys);
  const std::uint64_t full = full_mask(sys.ground_size);
  for (int x = 0; x < sys.ground_size; ++x) {
    const std::uint64_t keep = full & ~bit(x);
    if (nonempty_on(masks, keep) && distinct_on(masks, keep))
      return {false, x};
  }
  return {true, std::nullopt};
}

CharacterizedExtremalCheck is_extremal_characterized(const SetSystem& sys) {
  require_square(sys, "is_extremal_characterized");
  require_distinct(sys, "is_extremal_characterized");
  require_nonempty(sys, "is_extremal_characterized");
  const auto masks = masks_of(sys);
  std::uint64_t covered = 0;
  for (const std::uint64_t m : masks) covered |= m;
  if (covered != full_mask(sys.ground_size)) {
    const int missing = std::countr_zero(~covered);
    return {false, missing, std::nullopt};
  }
  for (int i = 0; i < sys.set_count(); ++i) {
    if (std::popcount(masks[i]) < 2) continue;
    bool reducible = false;
    for (std::uint64_t rest = masks[i]; rest != 0 && !reducible; rest &= rest - 1) {
      const std::uint64_t shrunk = masks[i] & ~(rest & (~rest + 1));
      for (const std::uint64_t m : masks)
        if (m == shrunk) {
          reducible = true;
          break;
        }
    }
    if (!reducible) return {false, std::nullopt, i};
  }
  return {true, std::nullopt, std::nullopt};
}

BipartiteGraph incidence_bipartite(const SetSystem& sys) {
  BipartiteGraph g(sys.set_count(), sys.ground_size);
  for (int i = 0; i < sys.set_count(); ++i)
    for (int x : sys.sets[i].to_vector()) g.add_edge(i, x);
  return g;
}

BipartiteGraph digraph_to_bipartite(const Digraph& d) {
  const int n = d.order();
  BipartiteGraph g(n, n);
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) {
    identity[i] = i;
    for (int j : d.in_ball(i).to_vector()) g.add_edge(i, j);
  }
  g.set_matching(std::move(identity));
  return g;
}

Digraph bipartite_to_digraph(const BipartiteGraph& g) {
  if (!g.has_matching() || !g.matching_is_perfect())
    throw PreconditionError("bipartite_to_digraph: a perfect matching must be designated");
  const int n = g.s_size();
  const std::vector<int>& m = g.matching();
  std::vector<Arc> arcs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && g.has_edge(y, m[x])) arcs.push_back({x, y});
  return Digraph(n, arcs);
}

SetSystem system_from_digraph(const Digraph& d) {
  if (auto twins = find_twins(d)) throw TwinsError(twins->first, twins->second);
  SetSystem sys;
  sys.ground_size = d.order();
  for (int v = 0; v < d.order(); ++v) sys.sets.push_back(d.in_ball(v));
  return sys;
}

namespace {

struct FamilyConstruction {
  std::vector<int> parents;
  std::vector<int> element_of_set;
};

// Builds a forest over the set indices by assigning each set a deleted
// element and (for non-singletons) the member equal to the shrunken set as
// its parent, with the deleted elements injective. Encodes the constructive
// direction of the extremal characterization; fails iff no assignment exists.
std::optional<FamilyConstruction> construct_family(const SetSystem& sys) {
  const int n = sys.set_count();
  const auto masks = masks_of(sys);

  // candidate (element, parent) choices per set, elements ascending
  std::vector<std::vector<std::pair<int, int>>> choices(n);
  for (int i = 0; i < n; ++i) {
    if (std::popcount(masks[i]) == 1) {
      choices[i].emplace_back(std::countr_zero(masks[i]), -1);
      continue;
    }
    for (std::uint64_t rest = masks[i]; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const std::uint64_t shrunk = masks[i] & ~bit(x);
      for (int j = 0; j < n; ++j)
        if (masks[j] == shrunk) {
          choices[i].emplace_back(x, j);
          break;
        }
    }
    if (choices[i].empty()) return std::nullopt;
  }

  std::vector<int> parents(n, -1), element(n, -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (const auto& [x, parent] : choices[i]) {
      if ((used & bit(x)) != 0) continue;
      used |= bit(x);
      element[i] = x;
      parents[i] = parent;
      if (self(self, i + 1)) return true;
      used &= ~bit(x);
      element[i] = -1;
      parents[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return FamilyConstruction{std::move(parents), std::move(element)};
}

bool certificate_matches_system(const SetSystem& sys, const Digraph& d,
                                const std::vector<int>& element_of_set) {
  const int n = sys.set_count();
  std::uint64_t used = 0;
  for (int i = 0; i < n; ++i) {
    if (element_of_set[i] < 0 || element_of_set[i] >= sys.ground_size) return false;
    used |= bit(element_of_set[i]);
  }
  if (std::popcount(used) != n) return false;
  for (int i = 0; i < n; ++i) {
    std::uint64_t mapped = 0;
    for (std::uint64_t rest = d.in_ball_bits(i); rest != 0; rest &= rest - 1)
      mapped |= bit(element_of_set[std::countr_zero(rest)]);
    if (mapped != sys.sets[i].bits()) return false;
  }
  return true;
}

}  // namespace

ExtremalWitness extremal_witness(const SetSystem& sys) {
  require_square(sys, "extremal_witness");
  require_distinct(sys, "extremal_witness");
  require_nonempty(sys, "extremal_witness");

  if (auto built = construct_family(sys)) {
    RootedForest forest(built->parents);
    Digraph d = transitive_closure(forest.as_digraph());
    const auto recognized = recognize_family(d);
    if (recognized && *recognized == forest &&
        certificate_matches_system(sys, d, built->element_of_set)) {
      return {ExtremalCertificate{std::move(d), std::move(forest),
                                  std::move(built->element_of_set)},
              std::nullopt};
    }
  }

  const auto direct = is_extremal_direct(sys);
  if (!direct.extremal) return {std::nullopt, direct.good_element};

  // Extremal but the structural construction failed: fall back to searching
  // all perfect matchings of the incidence bipartite graph.
  const BipartiteGraph incidence = incidence_bipartite(sys);
  std::optional<ExtremalCertificate> cert;
  for_each_perfect_matching(incidence, 8, [&](const std::vector<int>& t_of_s) {
    BipartiteGraph with_matching = incidence;
    with_matching.set_matching(t_of_s);
    Digraph d = bipartite_to_digraph(with_matching);
    auto forest = recognize_family(d);
    if (forest && certificate_matches_system(sys, d, t_of_s)) {
      cert = ExtremalCertificate{std::move(d), std::move(*forest), t_of_s};
      return true;
    }
    return false;
  });
  if (!cert)
    throw ConstructionError(
        "extremal_witness: system is extremal but no family digraph was constructed");
  return {std::move(cert), std::nullopt};
}

}  // namespace idcode
