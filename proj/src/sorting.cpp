#include "betaperm/sorting.hpp"

#include "betaperm/error.hpp"

#include <algorithm>

namespace betaperm {

namespace {

void sort_range(const std::vector<int>& in, std::size_t first, std::size_t last,
                std::vector<int>& out) {
  if (first == last) return;
  const auto top = std::max_element(in.begin() + first, in.begin() + last) - in.begin();
  const auto max_pos = static_cast<std::size_t>(top);
  sort_range(in, first, max_pos, out);
  sort_range(in, max_pos + 1, last, out);
  out.push_back(in[max_pos]);
}

} // namespace

Permutation stack_sort(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.size());
  sort_range(p.vector(), 0, p.size(), out);
  return Permutation::trusted(std::move(out));
}

Permutation stack_sort_simulated(const Permutation& p) {
  std::vector<int> stack;
  std::vector<int> out;
  out.reserve(p.size());
  for (int x : p) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  out.insert(out.end(), stack.rbegin(), stack.rend());
  return Permutation::trusted(std::move(out));
}

bool is_k_stack_sortable(const Permutation& p, int k) {
  if (k != 1 && k != 2) throw InvalidInput("stack sortability is supported for k = 1 or 2");
  Permutation cur = stack_sort(p);
  if (k == 2) cur = stack_sort(cur);
  return cur.is_identity();
}

SortabilityClass::SortabilityClass(int k) : k_(k) {
  if (k != 1 && k != 2) throw InvalidInput("stack sortability is supported for k = 1 or 2");
}

bool SortabilityClass::contains(const Permutation& p) {
  auto [it, inserted] = cache_.try_emplace(p.vector(), false);
  if (inserted) it->second = is_k_stack_sortable(p, k_);
  return it->second;
}

} // namespace betaperm
