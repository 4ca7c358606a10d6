#ifndef COLPERM_BIGCOUNT_HPP
#define COLPERM_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace colperm {

// All combinatorial counts are exact, unbounded integers: they grow like
// n! * r^n and overflow 64 bits almost immediately.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_factorial(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigCount big_pow(const BigCount& base, int exp) {
  BigCount p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

// |S_n^(r)| = n! * r^n
inline BigCount total_coloured_permutations(int n, int r) {
  return big_factorial(n) * big_pow(r, n);
}

}  // namespace colperm

#endif  // COLPERM_BIGCOUNT_HPP
