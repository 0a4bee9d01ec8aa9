#include "idcode/enumerate.hpp"

#include <stdexcept>

#include "idcode/errors.hpp"

namespace idcode {

DigraphEnumerator::DigraphEnumerator(int n, EnumMode mode) : n_(n), mode_(mode) {
  if (n < 0) throw std::invalid_argument("DigraphEnumerator: negative order");
  if (n > kMaxN)
    throw GuardError("digraph enumeration is limited to n <= " + std::to_string(kMaxN));
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t base = mode == EnumMode::kAll ? 4 : 3;
  count_ = 1;
  for (int i = 0; i < pairs; ++i) count_ *= base;
}

Digraph DigraphEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("DigraphEnumerator: index past end");
  const std::uint64_t base = mode_ == EnumMode::kAll ? 4 : 3;
  std::vector<Arc> arcs;
  std::uint64_t rem = index;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const int digit = static_cast<int>(rem % base);
      rem /= base;
      if (digit == 1 || digit == 3) arcs.push_back({i, j});
      if (digit == 2 || digit == 3) arcs.push_back({j, i});
    }
  }
  return Digraph(n_, arcs);
}

std::vector<Digraph> enumerate_digraphs(int n, EnumMode mode, EnumFilter filter) {
  DigraphEnumerator e(n, mode);
  std::vector<Digraph> out;
  for (std::uint64_t i = 0; i < e.count(); ++i) {
    Digraph d = e.at(i);
    if (filter == EnumFilter::kTwinFree && find_twins(d)) continue;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace idcode
