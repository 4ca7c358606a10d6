#include <doctest.h>

#include "colperm/formulas.hpp"

using namespace colperm;

TEST_CASE("factor_h") {
  CHECK(factor_h(5, {3, 2, 1}) == 7);
  CHECK(factor_h(4, {2, 2, 1}) == 5);
  SUBCASE("constant in j when r = d") {
    for (long long j : {0LL, 3LL, 17LL, 1000LL}) {
      CHECK(factor_h(j, {3, 2, 2}) == 4);  // (k-1)d
    }
  }
  CHECK_THROWS_AS(factor_h(-1, {2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(factor_h(1, {0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(factor_h(1, {2, 2, 3}), std::invalid_argument);
}

TEST_CASE("thm1_count") {
  CHECK(thm1_count(2, {2, 2, 1}) == 6);
  CHECK(thm1_count(4, {3, 1, 1}) == 8);
  CHECK(thm1_count(1, {2, 3, 2}) == 3);  // n < k: n! r^n

  SUBCASE("n < k convention across the boundary") {
    CHECK(thm1_count(0, {3, 2, 1}) == 1);
    CHECK(thm1_count(2, {3, 2, 1}) == 8);  // 2! 2^2
  }

  SUBCASE("k=1 closure: (r-d)^n n!") {
    for (int n = 0; n <= 6; ++n) {
      for (int r = 1; r <= 3; ++r) {
        for (int d = 0; d <= r; ++d) {
          CHECK(thm1_count(n, {1, r, d}) ==
                big_pow(r - d, n) * big_factorial(n));
        }
      }
    }
  }

  SUBCASE("r=1, d=1 specialization: (k-1)! (k-1)^(n-k+1)") {
    for (int k = 2; k <= 4; ++k) {
      for (int n = k; n <= 8; ++n) {
        CHECK(thm1_count(n, {k, 1, 1}) ==
              big_factorial(k - 1) * big_pow(k - 1, n - k + 1));
      }
    }
  }

  SUBCASE("r=2, d=1 specialization: (n+k-1)! / prod (2i-1)") {
    for (int k = 1; k <= 3; ++k) {
      BigCount odd = 1;
      for (int i = 1; i <= k - 1; ++i) odd *= 2 * i - 1;
      for (int n = k; n <= 6; ++n) {
        CHECK(thm1_count(n, {k, 2, 1}) == big_factorial(n + k - 1) / odd);
      }
    }
  }

  SUBCASE("d=0 degenerates to |S_n^(r)|") {
    for (int n = 0; n <= 5; ++n) {
      CHECK(thm1_count(n, {2, 2, 0}) == total_coloured_permutations(n, 2));
    }
  }

  SUBCASE("boundary value at n = k is (rk-d)(k-1)! r^(k-1)") {
    for (int k = 1; k <= 4; ++k) {
      for (int r = 1; r <= 3; ++r) {
        for (int d = 0; d <= r; ++d) {
          CHECK(thm1_count(k, {k, r, d}) ==
                BigCount(r * k - d) * big_factorial(k - 1) *
                    big_pow(r, k - 1));
        }
      }
    }
  }
}

TEST_CASE("cor_union_count") {
  SUBCASE("a = b collapses to thm1") {
    for (int n = 0; n <= 6; ++n) {
      CHECK(cor_union_count(n, 1, 1, {3, 2, 1}) == thm1_count(n, {3, 2, 1}));
    }
  }
  CHECK(cor_union_count(3, 1, 2, {2, 2, 1}) == 12);  // 2^(k-1) n!
  CHECK(cor_union_count(4, 1, 2, {2, 1, 1}) == 0);   // vanishing factors
  CHECK(cor_union_count(1, 1, 2, {2, 2, 1}) == 2);   // n < k: n! r^n
  CHECK_THROWS_AS(cor_union_count(4, 2, 1, {2, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cor_union_count(4, 0, 1, {2, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cor_union_count(4, 1, 3, {2, 2, 1}),
                  std::invalid_argument);
}

TEST_CASE("cor_full_union_count") {
  CHECK(cor_full_union_count(3, {2, 2, 1}) == 12);  // 2^(k-1) n!
  CHECK(cor_full_union_count(4, {3, 3, 3}) == 0);   // (r-d) = 0
  CHECK(cor_full_union_count(5, {2, 3, 1}) == 5760);

  SUBCASE("identity with the union corollary at a = 1, b = k") {
    for (int k = 1; k <= 4; ++k) {
      for (int r = 1; r <= 3; ++r) {
        for (int d = 0; d <= r; ++d) {
          for (int n = k; n <= 7; ++n) {
            CHECK(cor_full_union_count(n, {k, r, d}) ==
                  cor_union_count(n, 1, k, {k, r, d}));
          }
        }
      }
    }
  }

  CHECK_THROWS_AS(cor_full_union_count(1, {2, 2, 1}),
                  std::invalid_argument);  // n < k is the union form's job
}

TEST_CASE("thm2_count") {
  CHECK(thm2_count(3, {2, 1, 1}) == 2);
  CHECK(thm2_count(4, {2, 2, 1}) == 47);  // 3*4*5*(1/3+1/4+1/5)

  SUBCASE("n = k gives 1") {
    for (int k = 1; k <= 4; ++k) {
      for (int r = 1; r <= 3; ++r) {
        for (int d = 1; d <= r; ++d) {
          CHECK(thm2_count(k, {k, r, d}) == 1);
        }
      }
    }
  }

  SUBCASE("n < k gives 0") {
    CHECK(thm2_count(1, {2, 2, 1}) == 0);
    CHECK(thm2_count(2, {3, 1, 1}) == 0);
  }

  SUBCASE("well-defined when every h_j vanishes") {
    // k=1, r=1, d=1: h_j = 0 throughout
    CHECK(thm2_count(1, {1, 1, 1}) == 1);
    CHECK(thm2_count(2, {1, 1, 1}) == 0);
    CHECK(thm2_count(5, {1, 1, 1}) == 0);
  }

  CHECK_THROWS_AS(thm2_count(3, {2, 2, 0}), std::invalid_argument);
}

TEST_CASE("thm2_recurrence_check") {
  CHECK(thm2_recurrence_check(5, {2, 2, 1}));
  CHECK(thm2_recurrence_check(4, {3, 1, 1}));  // n = k+1
  CHECK(thm2_recurrence_check(6, {3, 2, 2}));
  SUBCASE("holds across a parameter sweep") {
    for (int k = 1; k <= 3; ++k) {
      for (int r = 1; r <= 3; ++r) {
        for (int d = 1; d <= r; ++d) {
          for (int n = k + 1; n <= k + 5; ++n) {
            CHECK(thm2_recurrence_check(n, {k, r, d}));
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(thm2_recurrence_check(2, {2, 2, 1}),
                  std::invalid_argument);
}

TEST_CASE("thm3_count") {
  CHECK(thm3_count(4, {3, 1, 1, 2}) == 2);
  CHECK(thm3_count(5, {3, 2, 1, 2}) == 42);  // 7!/5!
  CHECK(thm3_count(3, {3, 2, 1, 2}) == 1);   // n = k: empty product
  CHECK(thm3_count(2, {3, 2, 1, 2}) == 0);   // n < k

  SUBCASE("r=2, d=1 specialization: (n+k-1)!/(2k-1)!") {
    for (int k = 3; k <= 4; ++k) {
      for (int n = k; n <= 7; ++n) {
        CHECK(thm3_count(n, {k, 2, 1, 2}) ==
              big_factorial(n + k - 1) / big_factorial(2 * k - 1));
      }
    }
  }

  SUBCASE("independent of m within 2..k-1") {
    for (int n = 4; n <= 8; ++n) {
      CHECK(thm3_count(n, {4, 2, 1, 2}) == thm3_count(n, {4, 2, 1, 3}));
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(thm3_count(4, {2, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(thm3_count(4, {3, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(thm3_count(4, {3, 1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(thm3_count(4, {3, 1, 0, 2}), std::invalid_argument);
  }
}

TEST_CASE("sequence values used by the CLI examples") {
  // classical S_n(123,132) count 2^(n-1) in disguise
  const std::vector<BigCount> thm1_k3{4, 8, 16, 32, 64, 128};
  for (int n = 3; n <= 8; ++n) {
    CHECK(thm1_count(n, {3, 1, 1}) == thm1_k3[static_cast<std::size_t>(n - 3)]);
    CHECK(thm1_count(n, {3, 1, 1}) == big_pow(2, n - 1));
  }
  // (n+1)! at k=2, r=2, d=1
  for (int n = 2; n <= 5; ++n) {
    CHECK(thm1_count(n, {2, 2, 1}) == big_factorial(n + 1));
  }
  const std::vector<BigCount> thm3_seq{1, 6, 42, 336};
  for (int n = 3; n <= 6; ++n) {
    CHECK(thm3_count(n, {3, 2, 1, 2}) ==
          thm3_seq[static_cast<std::size_t>(n - 3)]);
  }
}
