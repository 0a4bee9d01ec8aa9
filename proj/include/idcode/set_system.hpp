#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "idcode/bipartite.hpp"
#include "idcode/digraph.hpp"
#include "idcode/family.hpp"

namespace idcode {

// A set system: ground set X = {0..ground_size-1} and an ordered list of
// subsets. The type permits duplicates and empty members; distinctness and
// nonemptiness are per-operation preconditions.
struct SetSystem {
  int ground_size = 0;
  std::vector<VertexSet> sets;

  static SetSystem from_masks(int ground_size, std::span<const std::uint64_t> masks);
  int set_count() const { return static_cast<int>(sets.size()); }
  bool sets_distinct() const;
  bool sets_nonempty() const;
};

// Smallest element x such that the traces A_i - {x} are pairwise distinct
// (at most one may be empty). Guaranteed to exist whenever the sets are
// distinct and there are at most as many sets as ground elements.
int bondy_element(const SetSystem& sys);

// Removal set X' of size ground_size - |sets| + 1 whose complement keeps all
// traces distinct. Greedy: repeatedly removes the smallest element that
// preserves distinctness, so the removal sequence is lexicographically
// smallest.
VertexSet bondy_reduce(const SetSystem& sys);

// Removal set X' of size ground_size - |sets| whose complement keeps all
// traces nonempty and distinct. Requires distinct nonempty sets and strictly
// more elements than sets.
VertexSet bondy_reduce_nonempty(const SetSystem& sys);

// Extremality by definition: no single element can be deleted while keeping
// all traces nonempty and distinct. good_element is the smallest deletable
// element when one exists (i.e. when not extremal).
struct DirectExtremalCheck {
  bool extremal = false;
  std::optional<int> good_element;
};
DirectExtremalCheck is_extremal_direct(const SetSystem& sys);

// Extremality by structure: the sets cover the ground set, and every set of
// size >= 2 contains an element whose removal yields another member.
struct CharacterizedExtremalCheck {
  bool extremal = false;
  std::optional<int> missing_element;  // ground element not covered
  std::optional<int> offending_set;    // index of a set with no removable element
};
CharacterizedExtremalCheck is_extremal_characterized(const SetSystem& sys);

// Membership bipartite graph: S = the sets, T = the ground elements.
BipartiteGraph incidence_bipartite(const SetSystem& sys);

// S and T are two copies of V(d); s_i is adjacent to exactly the in-ball of
// vertex i on the T side, and the identity matching is designated.
BipartiteGraph digraph_to_bipartite(const Digraph& d);

// Inverse construction from a designated perfect matching m: vertex set = S,
// with an arc x -> y whenever x != y and m(x) is adjacent to y. Applied to
// digraph_to_bipartite output this is the identity.
Digraph bipartite_to_digraph(const BipartiteGraph& g);

// The in-ball system of a twin-free digraph. Throws TwinsError otherwise.
SetSystem system_from_digraph(const Digraph& d);

// Constructive extremality decision. For extremal systems produces a
// closure-family digraph whose incidence bipartite graph matches the
// system's: matching[i] is the ground element paired with sets[i], and
// element-relabeling by the matching carries in-balls onto the sets.
struct ExtremalCertificate {
  Digraph digraph;
  RootedForest forest;
  std::vector<int> matching;
};
struct ExtremalWitness {
  std::optional<ExtremalCertificate> certificate;
  std::optional<int> good_element;
  bool extremal() const { return certificate.has_value(); }
};
ExtremalWitness extremal_witness(const SetSystem& sys);

}  // namespace idcode
