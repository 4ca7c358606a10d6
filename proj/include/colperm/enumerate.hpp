#ifndef COLPERM_ENUMERATE_HPP
#define COLPERM_ENUMERATE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "colperm/bigcount.hpp"
#include "colperm/pattern_set.hpp"
#include "colperm/perm.hpp"

namespace colperm {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caps the number of search states a single enumeration may visit.
// Exhausting the budget is an explicit error, never a silent truncation.
struct EnumerationBudget {
  std::int64_t max_states = std::numeric_limits<std::int64_t>::max();
  double time_hint_seconds = 0.0;  // advisory only, not enforced
};

struct CountReport {
  int n = 0;
  int r = 0;
  std::string tag;
  BigCount count;
  BigCount states_visited;
};

// Visits every element of S_n^(r) exactly once in canonical order:
// positions left to right, symbols ascending, colours ascending. The
// visitor receives a const ColouredPermutation&.
template <class Visitor>
void for_each_permutation(int n, int r, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<Element> word;
  word.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      visit(ColouredPermutation(word, r));
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = true;
      for (int c = 1; c <= r; ++c) {
        word.push_back({s, c});
        self(self, pos + 1);
        word.pop_back();
      }
      used[static_cast<std::size_t>(s)] = false;
    }
  };
  rec(rec, 0);
}

// Materializes S_n^(r) in canonical order (n! r^n objects, desk scale only).
std::vector<ColouredPermutation> enumerate_all(
    int n, int r, const EnumerationBudget& budget = {});

// |S_n^(r)(T)| by left-to-right backtracking: a partial word is extended
// one (symbol, colour) choice at a time and a branch is pruned as soon as a
// pattern occurrence completes at the newest position (containment is
// monotone under appending, so the whole subtree is dead). states_visited
// counts visited search nodes including the root.
CountReport count_avoiders(int n, int r, const PatternSet& T,
                           const EnumerationBudget& budget = {});

// Serial reference: filters the full canonical enumeration through the
// public matcher, no pruning. Kept as the oracle the backtracker must
// agree with; states_visited counts complete words examined.
CountReport count_avoiders_naive(int n, int r, const PatternSet& T,
                                 const EnumerationBudget& budget = {});

// Same search as count_avoiders with the tree partitioned by first element
// ((symbol, colour) pairs explored concurrently). Worker state is private;
// the only shared artifacts are the commutative count/state accumulators,
// so the result is schedule-independent and equals the sequential count.
CountReport count_avoiders_parallel(int n, int r, const PatternSet& T,
                                    const EnumerationBudget& budget = {});

// Number of psi in S_n^(r) avoiding every pattern of T except phi and
// containing phi exactly once. Pruning cuts a branch when a pattern of
// T\{phi} occurs or phi occurs twice.
CountReport count_exactly_once(int n, int r, const PatternSet& T,
                               const ColouredPermutation& phi,
                               const EnumerationBudget& budget = {});

CountReport count_exactly_once_naive(int n, int r, const PatternSet& T,
                                     const ColouredPermutation& phi,
                                     const EnumerationBudget& budget = {});

CountReport count_exactly_once_parallel(int n, int r, const PatternSet& T,
                                        const ColouredPermutation& phi,
                                        const EnumerationBudget& budget = {});

// The avoiders themselves, in canonical order (equals the enumerate_all
// stream filtered).
std::vector<ColouredPermutation> list_avoiders(
    int n, int r, const PatternSet& T, const EnumerationBudget& budget = {});

}  // namespace colperm

#endif  // COLPERM_ENUMERATE_HPP
