#pragma once

#include "betaperm/permutation.hpp"

#include <map>
#include <vector>

namespace betaperm {

/// One pass through a stack whose contents stay increasing from top to
/// bottom, via the recursion s(L n R) = s(L) s(R) n.
Permutation stack_sort(const Permutation& p);

/// The same operator by direct simulation: push letters left to right,
/// popping to the output while the top is smaller than the next letter,
/// then flush.
Permutation stack_sort_simulated(const Permutation& p);

/// True iff k applications of stack_sort give the identity. k must be 1 or 2.
bool is_k_stack_sortable(const Permutation& p, int k);

/// Membership in the k-stack-sortable class with a per-instance cache.
class SortabilityClass {
public:
  explicit SortabilityClass(int k);

  int passes() const noexcept { return k_; }
  bool contains(const Permutation& p);
  std::size_t cached() const noexcept { return cache_.size(); }

private:
  int k_;
  std::map<std::vector<int>, bool> cache_;
};

} // namespace betaperm
