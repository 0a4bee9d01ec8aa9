#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "idcode/bipartite.hpp"
#include "idcode/digraph.hpp"
#include "idcode/errors.hpp"

namespace idcode {

// Exact minimization is exponential-time; inputs are capped here.
inline constexpr int kSolverMaxVertices = 20;

// Verdict for one candidate code. Witnesses are the lexicographically
// smallest violators and are present exactly when the matching flag is false.
struct CodeReport {
  bool dominating = false;
  std::optional<int> undominated_witness;
  bool separating = false;
  std::optional<std::pair<int, int>> unseparated_witness;
  bool identifying = false;  // dominating && separating
};

struct MinCode {
  int size = 0;
  VertexSet code;
};

// Evaluates `code` against d: dominating (every in-ball meets the code),
// separating (all in-ball traces distinct), identifying (both).
CodeReport check_code(const Digraph& d, const VertexSet& code);

// All pairs u < v whose in-ball traces under `code` coincide, ascending.
std::vector<std::pair<int, int>> unseparated_pairs(const Digraph& d,
                                                   const VertexSet& code);

// Exact minimum codes. Subsets are searched in order of increasing size and,
// within a size, increasing bit pattern, so the witness is the smallest
// minimum code. Throws TwinsError when no code exists and GuardError above
// kSolverMaxVertices.
MinCode min_separating_code(const Digraph& d);
MinCode min_identifying_code(const Digraph& d);

// Bipartite S-side codes; `code` is a subset of T. In the report,
// "dominating" means every S-vertex has a neighbor in the code and
// "identifying" means S-discriminating (separating plus dominating).
CodeReport check_bipartite_code(const BipartiteGraph& g, const VertexSet& code);

// Exact minima over subsets of T, same search order and tie-break. The
// separating variant requires distinct S-neighborhoods; the discriminating
// variant additionally requires them nonempty. Throws NotIdentifiableError
// when the precondition fails.
MinCode min_s_separating_code(const BipartiteGraph& g);
MinCode min_discriminating_code(const BipartiteGraph& g);

}  // namespace idcode
