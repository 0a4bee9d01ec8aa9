#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace idcode {

// Subset of a vertex universe {0, ..., universe_size-1}, backed by a 64-bit
// mask. Bit i holds membership of vertex i, so comparing masks as integers
// orders equal-size sets by their smallest differing member.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe_size, std::uint64_t bits = 0);
  static VertexSet full(int universe_size);
  static VertexSet of(int universe_size, std::initializer_list<int> members);
  static VertexSet of(int universe_size, const std::vector<int>& members);

  int universe_size() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const;
  VertexSet& insert(int v);
  VertexSet& erase(int v);
  bool is_subset_of(const VertexSet& rhs) const;
  VertexSet complement() const;
  // Smallest member, or -1 when empty.
  int smallest() const;
  std::vector<int> to_vector() const;
  std::string to_string() const;  // "{0,1,4}", "{}" when empty

  friend VertexSet operator&(VertexSet a, const VertexSet& b);
  friend VertexSet operator|(VertexSet a, const VertexSet& b);
  friend VertexSet operator-(VertexSet a, const VertexSet& b);
  bool operator==(const VertexSet&) const = default;

 private:
  void check_index(int v) const;
  void check_same_universe(const VertexSet& rhs) const;

  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite loop-free digraph on vertices 0..n-1. Immutable after construction;
// at most 64 vertices so neighborhoods fit in one machine word.
class Digraph {
 public:
  static constexpr int kMaxVertices = 64;

  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs);

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }
  bool has_arc(int u, int v) const;
  std::vector<Arc> arcs() const;  // sorted by (tail, head)

  VertexSet in_neighbors(int v) const;
  VertexSet out_neighbors(int v) const;
  // in_ball(v) = {v} together with the tails of arcs into v; out_ball dually.
  VertexSet in_ball(int v) const;
  VertexSet out_ball(int v) const;
  std::uint64_t in_ball_bits(int v) const;
  std::uint64_t out_ball_bits(int v) const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int v) const;
  void add_arc_checked(int u, int v);

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> in_;   // in_[v]: tails of arcs into v
  std::vector<std::uint64_t> out_;  // out_[v]: heads of arcs out of v
};

// Lexicographically smallest pair u < v with equal in-balls, if any.
std::optional<std::pair<int, int>> find_twins(const Digraph& d);

// Vertices without incoming arcs.
VertexSet sources(const Digraph& d);

// Digraph with every arc flipped.
Digraph reverse(const Digraph& d);

// Arc (x, y) present iff the input has a directed path x -> y of length >= 1.
// Self-loops are never produced. Idempotent.
Digraph transitive_closure(const Digraph& d);

// Subgraph induced on `keep`, vertices relabeled in ascending order.
Digraph induced_subgraph(const Digraph& d, const VertexSet& keep);

bool has_symmetric_pair(const Digraph& d);
bool is_acyclic(const Digraph& d);

}  // namespace idcode
