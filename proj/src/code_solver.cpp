#include "idcode/code_solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace idcode {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Traces balls[v] & code, all distinct? Small insertion-sorted buffer with
// early exit on the first duplicate.
bool traces_distinct(const std::vector<std::uint64_t>& balls, std::uint64_t code) {
  std::uint64_t seen[64];
  int count = 0;
  for (const std::uint64_t ball : balls) {
    const std::uint64_t trace = ball & code;
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

bool traces_nonempty(const std::vector<std::uint64_t>& balls, std::uint64_t code) {
  for (const std::uint64_t ball : balls)
    if ((ball & code) == 0) return false;
  return true;
}

// Smallest colliding pair (u, v), u < v, under the trace map, if any.
std::optional<std::pair<int, int>> smallest_collision(
    const std::vector<std::uint64_t>& balls, std::uint64_t code) {
  const int n = static_cast<int>(balls.size());
  std::vector<std::pair<std::uint64_t, int>> traced(n);
  for (int v = 0; v < n; ++v) traced[v] = {balls[v] & code, v};
  std::sort(traced.begin(), traced.end());
  std::optional<std::pair<int, int>> best;
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && traced[j].first == traced[i].first) ++j;
    if (j - i >= 2) {
      const std::pair<int, int> cand{traced[i].second, traced[i + 1].second};
      if (!best || cand < *best) best = cand;
    }
    i = j;
  }
  return best;
}

CodeReport report_from_balls(const std::vector<std::uint64_t>& balls,
                             std::uint64_t code) {
  CodeReport r;
  r.dominating = true;
  for (int v = 0; v < static_cast<int>(balls.size()); ++v) {
    if ((balls[v] & code) == 0) {
      r.dominating = false;
      r.undominated_witness = v;
      break;
    }
  }
  r.unseparated_witness = smallest_collision(balls, code);
  r.separating = !r.unseparated_witness.has_value();
  r.identifying = r.dominating && r.separating;
  return r;
}

// Greedy upper bound: repeatedly add the vertex that resolves the most
// unseparated pairs plus (if required) undominated vertices. Terminates at
// the full set for any instance where a code exists.
int greedy_upper_bound(const std::vector<std::uint64_t>& balls, int universe,
                       bool need_domination) {
  const int n = static_cast<int>(balls.size());
  std::uint64_t code = 0;
  auto score = [&](std::uint64_t c) {
    int resolved = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v)
        if ((balls[u] & c) != (balls[v] & c)) ++resolved;
      if (need_domination && (balls[u] & c) != 0) ++resolved;
    }
    return resolved;
  };
  auto done = [&](std::uint64_t c) {
    return traces_distinct(balls, c) && (!need_domination || traces_nonempty(balls, c));
  };
  int members = 0;
  while (!done(code) && members < universe) {
    int best_vertex = -1, best_score = -1;
    for (int v = 0; v < universe; ++v) {
      if ((code & bit(v)) != 0) continue;
      const int s = score(code | bit(v));
      if (s > best_score) {
        best_score = s;
        best_vertex = v;
      }
    }
    code |= bit(best_vertex);
    ++members;
  }
  return members;
}

// Exact search over subsets of [0, universe) in order of increasing popcount
// and, within a popcount class, increasing bit pattern (Gosper's hack).
MinCode min_code_over(const std::vector<std::uint64_t>& balls, int universe,
                      bool need_domination) {
  const int n = static_cast<int>(balls.size());
  int lower = 0;
  while ((std::uint64_t{1} << lower) - (need_domination ? 1 : 0) <
         static_cast<std::uint64_t>(n))
    ++lower;
  const int upper = greedy_upper_bound(balls, universe, need_domination);
  const std::uint64_t limit = universe >= 64 ? 0 : std::uint64_t{1} << universe;
  for (int k = lower; k <= upper; ++k) {
    if (k == 0) {
      if (traces_distinct(balls, 0) && (!need_domination || traces_nonempty(balls, 0)))
        return {0, VertexSet(universe)};
      continue;
    }
    for (std::uint64_t c = (std::uint64_t{1} << k) - 1; c < limit;) {
      if (traces_distinct(balls, c) && (!need_domination || traces_nonempty(balls, c)))
        return {k, VertexSet(universe, c)};
      // Gosper: next mask with the same popcount.
      const std::uint64_t low = c & (~c + 1);
      const std::uint64_t ripple = c + low;
      c = ripple | (((c ^ ripple) >> 2) / low);
    }
  }
  throw std::logic_error("min code search exhausted below the greedy bound");
}

std::vector<std::uint64_t> in_balls_of(const Digraph& d) {
  std::vector<std::uint64_t> balls(d.order());
  for (int v = 0; v < d.order(); ++v) balls[v] = d.in_ball_bits(v);
  return balls;
}

std::vector<std::uint64_t> neighborhoods_of(const BipartiteGraph& g) {
  std::vector<std::uint64_t> nbhd(g.s_size());
  for (int s = 0; s < g.s_size(); ++s) nbhd[s] = g.adj_bits(s);
  return nbhd;
}

MinCode min_digraph_code(const Digraph& d, bool need_domination) {
  if (auto twins = find_twins(d)) throw TwinsError(twins->first, twins->second);
  if (d.order() > kSolverMaxVertices)
    throw GuardError("exact code search is limited to " +
                     std::to_string(kSolverMaxVertices) + " vertices");
  return min_code_over(in_balls_of(d), d.order(), need_domination);
}

MinCode min_bipartite_code(const BipartiteGraph& g, bool need_domination) {
  const auto nbhd = neighborhoods_of(g);
  if (auto dup = smallest_collision(nbhd, ~std::uint64_t{0}))
    throw NotIdentifiableError(dup->first, dup->second);
  if (need_domination)
    for (int s = 0; s < g.s_size(); ++s)
      if (nbhd[s] == 0) throw NotIdentifiableError(s);
  if (g.t_size() > kSolverMaxVertices)
    throw GuardError("exact code search is limited to " +
                     std::to_string(kSolverMaxVertices) + " vertices");
  return min_code_over(nbhd, g.t_size(), need_domination);
}

}  // namespace

CodeReport check_code(const Digraph& d, const VertexSet& code) {
  if (code.universe_size() != d.order())
    throw PreconditionError("check_code: code universe must equal digraph order");
  return report_from_balls(in_balls_of(d), code.bits());
}

std::vector<std::pair<int, int>> unseparated_pairs(const Digraph& d,
                                                   const VertexSet& code) {
  if (code.universe_size() != d.order())
    throw PreconditionError("unseparated_pairs: code universe must equal digraph order");
  const auto balls = in_balls_of(d);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < d.order(); ++u)
    for (int v = u + 1; v < d.order(); ++v)
      if ((balls[u] & code.bits()) == (balls[v] & code.bits())) out.emplace_back(u, v);
  return out;
}

MinCode min_separating_code(const Digraph& d) { return min_digraph_code(d, false); }

MinCode min_identifying_code(const Digraph& d) { return min_digraph_code(d, true); }

CodeReport check_bipartite_code(const BipartiteGraph& g, const VertexSet& code) {
  if (code.universe_size() != g.t_size())
    throw PreconditionError("check_bipartite_code: code must be a subset of T");
  return report_from_balls(neighborhoods_of(g), code.bits());
}

MinCode min_s_separating_code(const BipartiteGraph& g) {
  return min_bipartite_code(g, false);
}

MinCode min_discriminating_code(const BipartiteGraph& g) {
  return min_bipartite_code(g, true);
}

}  // namespace idcode
