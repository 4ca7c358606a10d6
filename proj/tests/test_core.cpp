#include <doctest.h>

#include "colperm/enumerate.hpp"
#include "colperm/perm.hpp"
#include "oracle.hpp"

using namespace colperm;

TEST_CASE("parse_perm reads the canonical text format") {
  const ColouredPermutation phi = parse_perm("1^1,3^2,2^1", 2);
  CHECK(phi.size() == 3);
  CHECK(phi.rank() == 2);
  CHECK(phi.absolute() == std::vector<int>{1, 3, 2});
  CHECK(phi.colour_at(1) == 1);
  CHECK(phi.colour_at(2) == 2);
  CHECK(phi.colour_at(3) == 1);

  const ColouredPermutation single = parse_perm("1^1", 1);
  CHECK(single.size() == 1);
  CHECK(single.rank() == 1);

  SUBCASE("rank is inferred as the maximum colour when omitted") {
    CHECK(parse_perm("1^1,3^2,2^1").rank() == 2);
    CHECK(parse_perm("1^1").rank() == 1);
  }

  SUBCASE("whitespace around tokens is tolerated") {
    CHECK(parse_perm(" 1^1, 2^2 ", 2) == parse_perm("1^1,2^2", 2));
  }

  SUBCASE("empty text is the empty permutation") {
    CHECK(parse_perm("", 3).size() == 0);
    CHECK(parse_perm("", 3).rank() == 3);
  }
}

TEST_CASE("parse_perm rejects invalid input") {
  CHECK_THROWS_AS(parse_perm("1^1,1^2", 2), ParseError);   // duplicate symbol
  CHECK_THROWS_AS(parse_perm("1^1,3^1", 2), ParseError);   // missing symbol 2
  CHECK_THROWS_AS(parse_perm("1^3", 2), ParseError);       // colour > rank
  CHECK_THROWS_AS(parse_perm("1^", 2), ParseError);
  CHECK_THROWS_AS(parse_perm("1", 2), ParseError);
  CHECK_THROWS_AS(parse_perm("a^1", 2), ParseError);
  CHECK_THROWS_AS(parse_perm("1^0", 2), ParseError);
  CHECK_THROWS_AS(parse_perm("0^1", 2), ParseError);
  CHECK_THROWS_AS(parse_perm("1^1,,2^2", 2), ParseError);
}

TEST_CASE("format_perm is the inverse of parse_perm") {
  CHECK(format_perm(parse_perm("1^1,3^2,2^1", 2)) == "1^1,3^2,2^1");
  CHECK(format_perm(parse_perm("1^1", 1)) == "1^1");
  CHECK(format_perm(ColouredPermutation()) == "");

  // round trip across all of S_3^(2)
  int seen = 0;
  for_each_permutation(3, 2, [&](const ColouredPermutation& phi) {
    CHECK(parse_perm(format_perm(phi), 2) == phi);
    ++seen;
  });
  CHECK(seen == 48);
}

TEST_CASE("is_occurrence applies both containment conditions") {
  const ColouredPermutation host = parse_perm("1^1,2^2,3^2", 2);
  CHECK_FALSE(is_occurrence(host, parse_perm("1^1,2^1", 2),
                            Occurrence({1, 2})));  // colour mismatch at j=2
  CHECK(is_occurrence(host, parse_perm("1^1,2^2", 2), Occurrence({1, 2})));

  const ColouredPermutation phi = parse_perm("2^1,1^2,3^1", 2);
  CHECK(is_occurrence(phi, phi, Occurrence({1, 2, 3})));  // identity embedding

  SUBCASE("order-isomorphism failures are detected") {
    CHECK_FALSE(is_occurrence(host, parse_perm("2^2,1^2", 2),
                              Occurrence({2, 3})));
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(is_occurrence(host, parse_perm("1^1,2^2", 2),
                                  Occurrence({1, 2, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_occurrence(host, parse_perm("1^1,2^2", 2),
                                  Occurrence({1, 4})),
                    std::out_of_range);
    CHECK_THROWS_AS(is_occurrence(host, parse_perm("1^1", 1),
                                  Occurrence({1})),
                    std::invalid_argument);  // rank mismatch
    CHECK_THROWS_AS(Occurrence({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Occurrence({3, 1}), std::invalid_argument);
  }
}

TEST_CASE("count_occurrences counts index sequences") {
  const ColouredPermutation host = parse_perm("1^1,2^2,3^2", 2);
  CHECK(count_occurrences(host, parse_perm("1^1,2^2", 2)) == 2);
  CHECK(count_occurrences(host, parse_perm("1^1,2^1", 2)) == 0);
  CHECK(count_occurrences(parse_perm("1^1", 1), parse_perm("1^1,2^1", 1)) ==
        0);  // pattern longer than host
  CHECK(count_occurrences(host, parse_perm("", 2)) == 1);  // empty pattern
  CHECK_THROWS_AS(count_occurrences(host, parse_perm("1^1", 1)),
                  std::invalid_argument);
}

TEST_CASE("matcher agrees with the k-subset oracle exhaustively") {
  // n <= 5, k <= 3, r <= 2: every host/pattern pair
  for (int r = 1; r <= 2; ++r) {
    std::vector<ColouredPermutation> patterns;
    for (int k = 1; k <= 3; ++k) {
      for (const ColouredPermutation& p : enumerate_all(k, r)) {
        patterns.push_back(p);
      }
    }
    for (int n = 0; n <= 5; ++n) {
      for (const ColouredPermutation& host : enumerate_all(n, r)) {
        for (const ColouredPermutation& pat : patterns) {
          const BigCount expected =
              oracle::count_occurrences_subsets(host, pat);
          REQUIRE(count_occurrences(host, pat) == expected);
          REQUIRE(contains(host, pat) == (expected > 0));
        }
      }
    }
  }
}

TEST_CASE("contains and avoids") {
  const ColouredPermutation host = parse_perm("1^1,2^2,3^2", 2);
  CHECK(avoids(host, parse_perm("1^1,2^1", 2)));
  CHECK(contains(host, host));
  CHECK(avoids(parse_perm("1^1,2^1", 1), parse_perm("1^1,2^1,3^1", 1)));
  CHECK_THROWS_AS(contains(host, parse_perm("1^1", 1)),
                  std::invalid_argument);
}

TEST_CASE("r=1 containment equals classical pattern containment") {
  for (const ColouredPermutation& host : enumerate_all(4, 1)) {
    for (int k = 2; k <= 3; ++k) {
      for (const ColouredPermutation& pat : enumerate_all(k, 1)) {
        CHECK(contains(host, pat) ==
              oracle::contains_classical(host.absolute(), pat.absolute()));
      }
    }
  }
}

TEST_CASE("ColouredPermutation validates its invariants") {
  CHECK_THROWS_AS(ColouredPermutation({{1, 1}, {1, 2}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(ColouredPermutation({{1, 1}, {3, 1}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(ColouredPermutation({{1, 3}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColouredPermutation({{1, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColouredPermutation({{1, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("1^1").element_at(2), std::out_of_range);
  CHECK_THROWS_AS(parse_perm("1^1").element_at(0), std::out_of_range);
}
