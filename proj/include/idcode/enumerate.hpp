#pragma once

#include <cstdint>
#include <vector>

#include "idcode/digraph.hpp"

namespace idcode {

enum class EnumMode { kAll, kOriented };
enum class EnumFilter { kNone, kTwinFree };

// Deterministic enumeration of all labeled digraphs on n vertices.
//
// The index is read in base 4 (all mode: none, i->j, j->i, both) or base 3
// (oriented mode: none, i->j, j->i) with one digit per unordered pair (i, j),
// i < j, pairs in lexicographic order, pair (0,1) least significant. Streams
// are splittable by index range and identical across runs.
class DigraphEnumerator {
 public:
  static constexpr int kMaxN = 5;

  DigraphEnumerator(int n, EnumMode mode);

  int order() const { return n_; }
  EnumMode mode() const { return mode_; }
  std::uint64_t count() const { return count_; }
  Digraph at(std::uint64_t index) const;

 private:
  int n_;
  EnumMode mode_;
  std::uint64_t count_;
};

// Materialized stream in index order; kTwinFree drops digraphs with twins.
// Intended for small n (tests and interactive use).
std::vector<Digraph> enumerate_digraphs(int n, EnumMode mode, EnumFilter filter);

}  // namespace idcode
