#ifndef COLPERM_FORMULAS_HPP
#define COLPERM_FORMULAS_HPP

#include "colperm/bigcount.hpp"

namespace colperm {

// Parameters of the pattern families: pattern length k, colour count r,
// d = |I| (0..r), and the first symbol m where a formula depends on it.
struct FamilyParams {
  int k = 1;
  int r = 1;
  int d = 1;
  int m = 1;
};

// The linear factor h_j = (r-d)j + (k-1)d shared by every product formula.
BigCount factor_h(long long j, const FamilyParams& p);

// Avoiders of the family T(k, r, m, I): (k-1)! r^(k-1) prod_{j=k}^n h_j for
// n >= k, independent of m. For n < k no length-k pattern fits, so the
// count is all of S_n^(r), n! r^n.
BigCount thm1_count(int n, const FamilyParams& p);

// Avoiders of the union of T(k, r, m, I) over m = a..b:
// (k-1)! r^(k-1) prod_{j=k}^n (d(k+a-b-1) + j(r-d)); n < k as above.
BigCount cor_union_count(int n, int a, int b, const FamilyParams& p);

// Avoiders of the full union m = 1..k: r^(k-1) (r-d)^(n+1-k) n!. Kept as a
// separate evaluation so its agreement with cor_union_count(n, 1, k, .) is
// a checkable identity, not a tautology. Requires n >= k.
BigCount cor_full_union_count(int n, const FamilyParams& p);

// Permutations avoiding T(k, r, 1, I) minus one pattern phi and containing
// phi exactly once. Evaluated as sum_{j=k}^n prod_{i != j} h_i, which is an
// integer by construction and stays defined when some h_j = 0; the
// product-times-reciprocal-sum is display notation for the same value.
// Independent of which phi is chosen, and applies equally to the m = k
// family. Returns 0 for n < k (phi cannot occur at all). Requires d >= 1.
BigCount thm2_count(int n, const FamilyParams& p);

// thm2_count(n) == h_n * thm2_count(n-1) + prod_{j=k}^{n-1} h_j, n >= k+1.
bool thm2_recurrence_check(int n, const FamilyParams& p);

// The exactly-once count for a middle first symbol 2 <= m <= k-1 (so
// k >= 3): prod_{j=k+1}^n h_j for n >= k+1, with the empty product giving 1
// at n = k. Returns 0 for n < k. Requires d >= 1.
BigCount thm3_count(int n, const FamilyParams& p);

}  // namespace colperm

#endif  // COLPERM_FORMULAS_HPP
