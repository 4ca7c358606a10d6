// Test-side oracles, deliberately independent of the library's embedding
// search: occurrence counting enumerates every k-subset of positions and
// applies the containment definition via is_occurrence.
#ifndef COLPERM_TESTS_ORACLE_HPP
#define COLPERM_TESTS_ORACLE_HPP

#include <vector>

#include "colperm/perm.hpp"

namespace oracle {

template <class Fn>
void for_each_index_subset(int n, int k, Fn&& fn) {
  std::vector<int> indices(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int slot, int from) -> void {
    if (slot == k) {
      fn(indices);
      return;
    }
    for (int i = from; i <= n - (k - slot) + 1; ++i) {
      indices[static_cast<std::size_t>(slot)] = i;
      self(self, slot + 1, i + 1);
    }
  };
  rec(rec, 0, 1);
}

inline colperm::BigCount count_occurrences_subsets(
    const colperm::ColouredPermutation& host,
    const colperm::ColouredPermutation& pattern) {
  colperm::BigCount total = 0;
  if (pattern.size() > host.size()) return total;
  for_each_index_subset(host.size(), pattern.size(),
                        [&](const std::vector<int>& indices) {
                          if (colperm::is_occurrence(
                                  host, pattern,
                                  colperm::Occurrence(indices))) {
                            ++total;
                          }
                        });
  return total;
}

// Classical uncoloured containment on bare symbol sequences.
inline bool contains_classical(const std::vector<int>& host,
                               const std::vector<int>& pattern) {
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pattern.size());
  if (k > n) return false;
  bool found = false;
  for_each_index_subset(n, k, [&](const std::vector<int>& indices) {
    if (found) return;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const bool h = host[static_cast<std::size_t>(indices[i] - 1)] <
                       host[static_cast<std::size_t>(indices[j] - 1)];
        const bool p = pattern[static_cast<std::size_t>(i)] <
                       pattern[static_cast<std::size_t>(j)];
        if (h != p) return;
      }
    }
    found = true;
  });
  return found;
}

}  // namespace oracle

#endif  // COLPERM_TESTS_ORACLE_HPP
