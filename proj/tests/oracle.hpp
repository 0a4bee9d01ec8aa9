#pragma once

// Test-only brute-force oracles. Kept independent of the library's solver
// path: neighborhoods are recomputed from the arc/edge lists and minima are
// found by scanning every subset.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "idcode/bipartite.hpp"
#include "idcode/digraph.hpp"

namespace oracle {

inline std::uint64_t in_ball(const idcode::Digraph& d, int v) {
  std::uint64_t ball = std::uint64_t{1} << v;
  for (const idcode::Arc& arc : d.arcs())
    if (arc.head == v) ball |= std::uint64_t{1} << arc.tail;
  return ball;
}

inline bool is_separating(const idcode::Digraph& d, std::uint64_t code) {
  for (int u = 0; u < d.order(); ++u)
    for (int v = u + 1; v < d.order(); ++v)
      if ((in_ball(d, u) & code) == (in_ball(d, v) & code)) return false;
  return true;
}

inline bool is_dominating(const idcode::Digraph& d, std::uint64_t code) {
  for (int u = 0; u < d.order(); ++u)
    if ((in_ball(d, u) & code) == 0) return false;
  return true;
}

struct Minimum {
  int size = 0;
  std::uint64_t code = 0;
};

// Scans all subsets; smallest (popcount, bit pattern) valid code wins.
inline std::optional<Minimum> min_code(const idcode::Digraph& d, bool identifying) {
  std::optional<Minimum> best;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << d.order()); ++c) {
    if (!is_separating(d, c)) continue;
    if (identifying && !is_dominating(d, c)) continue;
    const int size = std::popcount(c);
    if (!best || size < best->size || (size == best->size && c < best->code))
      best = Minimum{size, c};
  }
  return best;
}

inline std::uint64_t s_neighborhood(const idcode::BipartiteGraph& g, int s) {
  std::uint64_t nbhd = 0;
  for (const auto& [es, et] : g.edges())
    if (es == s) nbhd |= std::uint64_t{1} << et;
  return nbhd;
}

inline std::optional<Minimum> min_bipartite_code(const idcode::BipartiteGraph& g,
                                                 bool discriminating) {
  std::optional<Minimum> best;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << g.t_size()); ++c) {
    bool ok = true;
    for (int u = 0; u < g.s_size() && ok; ++u) {
      const std::uint64_t tu = s_neighborhood(g, u) & c;
      if (discriminating && tu == 0) ok = false;
      for (int v = u + 1; v < g.s_size() && ok; ++v)
        if (tu == (s_neighborhood(g, v) & c)) ok = false;
    }
    if (!ok) continue;
    const int size = std::popcount(c);
    if (!best || size < best->size || (size == best->size && c < best->code))
      best = Minimum{size, c};
  }
  return best;
}

// Uniform random digraph on n vertices: each unordered pair independently
// gets none / one / the other / both arcs.
inline idcode::Digraph random_digraph(std::mt19937_64& rng, int n,
                                      bool allow_symmetric = true) {
  std::vector<idcode::Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      switch (rng() % (allow_symmetric ? 4 : 3)) {
        case 1: arcs.push_back({i, j}); break;
        case 2: arcs.push_back({j, i}); break;
        case 3: arcs.push_back({i, j}); arcs.push_back({j, i}); break;
        default: break;
      }
    }
  }
  return idcode::Digraph(n, arcs);
}

// Transitive closure of the directed path 0 -> 1 -> ... -> n-1: all pairs
// (i, j) with i < j.
inline idcode::Digraph chain_tc(int n) {
  std::vector<idcode::Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
  return idcode::Digraph(n, arcs);
}

inline idcode::Digraph c3() { return idcode::Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace oracle
