#pragma once

#include <optional>
#include <vector>

#include "idcode/digraph.hpp"

namespace idcode {

// Rooted oriented forest as a parent map; -1 marks a root.
class RootedForest {
 public:
  RootedForest() = default;
  explicit RootedForest(std::vector<int> parents);  // validates range/acyclicity

  int size() const { return static_cast<int>(parents_.size()); }
  std::optional<int> parent(int v) const;
  const std::vector<int>& parents() const { return parents_; }
  VertexSet roots() const;
  Digraph as_digraph() const;  // arc parent -> child for every non-root

  bool operator==(const RootedForest&) const = default;

 private:
  std::vector<int> parents_;
};

// Disjoint union: b's vertices are shifted up by a's order.
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Adds a new vertex with an arc to every existing vertex. The new vertex
// takes index 0 and the old vertices shift up by one, so sources sort first.
Digraph apex(const Digraph& d);

// Accepts exactly the transitive closures of rooted oriented forests --
// equivalently, the digraphs obtainable from single vertices by disjoint_union
// and apex -- and returns the underlying forest. Rejections return nullopt.
std::optional<RootedForest> recognize_family(const Digraph& d);

// Effect of dropping vertex x from the whole-vertex-set code of a family
// member: either x was a root (V - {x} still separates everything) or x and
// its forest father become the unique unseparated pair.
struct SeparationWitness {
  int vertex = 0;
  std::optional<int> father;
  bool source_case() const { return !father.has_value(); }
};

// Throws NotInFamilyError when recognize_family rejects d.
SeparationWitness family_separation_witness(const Digraph& d, int x);

}  // namespace idcode
