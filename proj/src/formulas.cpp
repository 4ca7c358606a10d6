#include "colperm/formulas.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace colperm {

namespace {

void check_params(const FamilyParams& p) {
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  if (p.r < 1) throw std::invalid_argument("r must be >= 1");
  if (p.d < 0 || p.d > p.r) throw std::invalid_argument("d must lie in 0..r");
}

void check_n(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
}

BigCount h(long long j, const FamilyParams& p) {
  return BigCount(p.r - p.d) * j + BigCount(p.k - 1) * p.d;
}

}  // namespace

BigCount factor_h(long long j, const FamilyParams& p) {
  check_params(p);
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  return h(j, p);
}

BigCount thm1_count(int n, const FamilyParams& p) {
  check_params(p);
  check_n(n);
  if (n < p.k) return total_coloured_permutations(n, p.r);
  BigCount result = big_factorial(p.k - 1) * big_pow(p.r, p.k - 1);
  for (int j = p.k; j <= n; ++j) result *= h(j, p);
  return result;
}

BigCount cor_union_count(int n, int a, int b, const FamilyParams& p) {
  check_params(p);
  check_n(n);
  if (a < 1 || a > b || b > p.k) {
    throw std::invalid_argument("need 1 <= a <= b <= k");
  }
  if (n < p.k) return total_coloured_permutations(n, p.r);
  BigCount result = big_factorial(p.k - 1) * big_pow(p.r, p.k - 1);
  for (int j = p.k; j <= n; ++j) {
    result *= BigCount(p.d) * (p.k + a - b - 1) + BigCount(j) * (p.r - p.d);
  }
  return result;
}

BigCount cor_full_union_count(int n, const FamilyParams& p) {
  check_params(p);
  if (n < p.k) {
    throw std::invalid_argument(
        "full-union formula needs n >= k; use cor_union_count for the n < k "
        "convention");
  }
  return big_pow(p.r, p.k - 1) * big_pow(p.r - p.d, n + 1 - p.k) *
         big_factorial(n);
}

BigCount thm2_count(int n, const FamilyParams& p) {
  check_params(p);
  check_n(n);
  if (p.d < 1) throw std::invalid_argument("thm2 needs d >= 1");
  if (n < p.k) return 0;
  // sum over j of prod_{i != j} h_i, via prefix/suffix products
  const int terms = n - p.k + 1;
  std::vector<BigCount> factors(static_cast<std::size_t>(terms));
  for (int j = p.k; j <= n; ++j) {
    factors[static_cast<std::size_t>(j - p.k)] = h(j, p);
  }
  std::vector<BigCount> suffix(static_cast<std::size_t>(terms) + 1);
  suffix[static_cast<std::size_t>(terms)] = 1;
  for (int i = terms - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        factors[static_cast<std::size_t>(i)] *
        suffix[static_cast<std::size_t>(i) + 1];
  }
  BigCount result = 0;
  BigCount prefix = 1;
  for (int i = 0; i < terms; ++i) {
    result += prefix * suffix[static_cast<std::size_t>(i) + 1];
    prefix *= factors[static_cast<std::size_t>(i)];
  }
  return result;
}

bool thm2_recurrence_check(int n, const FamilyParams& p) {
  check_params(p);
  if (p.d < 1) throw std::invalid_argument("thm2 needs d >= 1");
  if (n < p.k + 1) throw std::invalid_argument("recurrence needs n >= k+1");
  BigCount tail = 1;
  for (int j = p.k; j <= n - 1; ++j) tail *= h(j, p);
  return thm2_count(n, p) == h(n, p) * thm2_count(n - 1, p) + tail;
}

BigCount thm3_count(int n, const FamilyParams& p) {
  check_params(p);
  check_n(n);
  if (p.d < 1) throw std::invalid_argument("thm3 needs d >= 1");
  if (p.k < 3) throw std::invalid_argument("thm3 needs k >= 3");
  if (p.m < 2 || p.m > p.k - 1) {
    throw std::invalid_argument("thm3 needs 2 <= m <= k-1");
  }
  if (n < p.k) return 0;
  BigCount result = 1;  // empty product at n = k
  for (int j = p.k + 1; j <= n; ++j) result *= h(j, p);
  return result;
}

}  // namespace colperm
