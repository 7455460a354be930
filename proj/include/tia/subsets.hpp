#pragma once

#include <vector>

namespace tia {

// Lexicographic k-subsets of {0..n-1}; visit returns true to stop early.
// Returns whether a visit accepted.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> stack;
  stack.reserve(static_cast<size_t>(k));
  int next = 0;
  for (;;) {
    if (static_cast<int>(stack.size()) == k) {
      if (visit(static_cast<const std::vector<int>&>(stack))) return true;
    } else if (next + (k - static_cast<int>(stack.size())) <= n) {
      stack.push_back(next);
      ++next;
      continue;
    }
    if (stack.empty()) return false;
    next = stack.back() + 1;
    stack.pop_back();
  }
}

}  // namespace tia
