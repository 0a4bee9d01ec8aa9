#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idcode/digraph.hpp"

namespace idcode {

// Bipartite graph on parts S and T with an optional designated matching.
// The matching is stored as matching[s] = t (-1 when s is unmatched);
// "perfect" means it saturates both sides, which requires |S| = |T|.
class BipartiteGraph {
 public:
  static constexpr int kMaxPart = 64;

  BipartiteGraph() = default;
  BipartiteGraph(int s_size, int t_size);
  BipartiteGraph(int s_size, int t_size, std::span<const std::pair<int, int>> edges);

  int s_size() const { return s_size_; }
  int t_size() const { return t_size_; }
  int edge_count() const { return edge_count_; }
  bool has_edge(int s, int t) const;
  void add_edge(int s, int t);
  std::vector<std::pair<int, int>> edges() const;  // sorted by (s, t)

  VertexSet neighborhood_of_s(int s) const;  // subset of T
  VertexSet neighborhood_of_t(int t) const;  // subset of S
  std::uint64_t adj_bits(int s) const;

  bool has_matching() const { return matching_.has_value(); }
  const std::vector<int>& matching() const;
  void set_matching(std::vector<int> t_of_s);
  void clear_matching() { matching_.reset(); }
  bool matching_is_perfect() const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  void check_s(int s) const;
  void check_t(int t) const;

  int s_size_ = 0;
  int t_size_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> adj_;  // adj_[s] = T-mask
  std::optional<std::vector<int>> matching_;
};

// A subset of S whose joint neighborhood is strictly smaller, certifying that
// no perfect matching exists.
struct HallViolator {
  VertexSet s_subset;
  VertexSet neighborhood;
};

struct MatchingResult {
  std::optional<std::vector<int>> matching;  // matching[s] = t, perfect
  std::optional<HallViolator> violator;
  bool perfect() const { return matching.has_value(); }
};

// Deterministic augmenting-path search (S-vertices and their adjacency scanned
// in ascending order). Requires |S| = |T|; returns either a perfect matching
// or a Hall violator.
MatchingResult perfect_matching(const BipartiteGraph& g);

}  // namespace idcode
