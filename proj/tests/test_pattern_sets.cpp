#include <doctest.h>

#include <algorithm>
#include <set>

#include "colperm/enumerate.hpp"
#include "colperm/pattern_set.hpp"

using namespace colperm;

namespace {

// Filter-based oracle for the family constructor: select from all of
// S_k^(r) by first element.
std::vector<ColouredPermutation> family_by_filter(int k, int r, int m,
                                                  const ColourSet& I) {
  std::vector<ColouredPermutation> out;
  for (const ColouredPermutation& phi : enumerate_all(k, r)) {
    if (phi.symbol_at(1) == m && I.contains_colour(phi.colour_at(1))) {
      out.push_back(phi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ColourSet basics") {
  const ColourSet I({2, 1, 2}, 3);
  CHECK(I.size() == 2);
  CHECK(I.members() == std::vector<int>{1, 2});
  CHECK(I.contains_colour(1));
  CHECK_FALSE(I.contains_colour(3));
  CHECK(I.to_string() == "{1,2}");
  CHECK(ColourSet::first(0, 2).size() == 0);
  CHECK(ColourSet::first(2, 3).members() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(ColourSet({3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColourSet({0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColourSet::first(3, 2), std::invalid_argument);
}

TEST_CASE("build_T constructs the first-symbol family") {
  const PatternSet T = build_T(2, 2, 1, ColourSet({1}, 2));
  REQUIRE(T.size() == 2);
  CHECK(T.patterns()[0] == parse_perm("1^1,2^1", 2));
  CHECK(T.patterns()[1] == parse_perm("1^1,2^2", 2));
  CHECK(T.tag() == "T(k=2,r=2,m=1,I={1})");

  const PatternSet T1 = build_T(1, 2, 1, ColourSet({1, 2}, 2));
  REQUIRE(T1.size() == 2);
  CHECK(T1.patterns()[0] == parse_perm("1^1", 2));
  CHECK(T1.patterns()[1] == parse_perm("1^2", 2));

  CHECK(build_T(3, 2, 2, ColourSet({1, 2}, 2)).size() == 16);

  CHECK_THROWS_AS(build_T(2, 2, 3, ColourSet({1}, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_T(2, 2, 0, ColourSet({1}, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_T(2, 3, 1, ColourSet({1}, 2)),
                  std::invalid_argument);  // colour set rank mismatch
}

TEST_CASE("build_T matches the filter oracle and the size formula") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<ColourSet> subsets;
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::vector<int> members;
      for (int c = 1; c <= r; ++c) {
        if (mask & (1 << (c - 1))) members.push_back(c);
      }
      subsets.emplace_back(std::move(members), r);
    }
    for (int k = 1; k <= 4; ++k) {
      for (int m = 1; m <= k; ++m) {
        for (const ColourSet& I : subsets) {
          const PatternSet T = build_T(k, r, m, I);
          const BigCount expected_size = BigCount(I.size()) *
                                         big_factorial(k - 1) *
                                         big_pow(r, k - 1);
          CHECK(BigCount(T.size()) == expected_size);
          CHECK(T.patterns() == family_by_filter(k, r, m, I));
          for (const ColouredPermutation& phi : T.patterns()) {
            CHECK(phi.symbol_at(1) == m);
            CHECK(I.contains_colour(phi.colour_at(1)));
          }
        }
      }
    }
  }
}

TEST_CASE("families with different first symbols are disjoint") {
  const ColourSet I({1, 2}, 2);
  for (int m1 = 1; m1 <= 3; ++m1) {
    for (int m2 = m1 + 1; m2 <= 3; ++m2) {
      const PatternSet A = build_T(3, 2, m1, I);
      const PatternSet B = build_T(3, 2, m2, I);
      for (const ColouredPermutation& phi : A.patterns()) {
        CHECK_FALSE(B.contains_pattern(phi));
      }
    }
  }
}

TEST_CASE("build_T_union") {
  const ColourSet I1({1}, 2);
  SUBCASE("degenerate union equals build_T") {
    CHECK(build_T_union(3, 2, 2, 2, I1).patterns() ==
          build_T(3, 2, 2, I1).patterns());
  }
  SUBCASE("spec examples") {
    CHECK(build_T_union(2, 2, 1, 2, I1).size() == 4);
    const PatternSet all_s2 = build_T_union(2, 1, 1, 2, ColourSet({1}, 1));
    CHECK(all_s2.size() == 2);  // every pattern of S_2 starts with some m
    CHECK(all_s2.patterns() == enumerate_all(2, 1));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_T_union(2, 2, 2, 1, I1), std::invalid_argument);
    CHECK_THROWS_AS(build_T_union(2, 2, 1, 3, I1), std::invalid_argument);
    CHECK_THROWS_AS(build_T_union(2, 2, 0, 1, I1), std::invalid_argument);
  }
}

TEST_CASE("build_M removes exactly phi") {
  const ColourSet I1({1}, 2);
  const PatternSet M =
      build_M(2, 2, 1, I1, parse_perm("1^1,2^1", 2));
  REQUIRE(M.size() == 1);
  CHECK(M.patterns()[0] == parse_perm("1^1,2^2", 2));

  CHECK(build_M(1, 1, 1, ColourSet({1}, 1), parse_perm("1^1", 1)).empty());

  CHECK_THROWS_AS(build_M(2, 2, 1, I1, parse_perm("2^1,1^1", 2)),
                  std::invalid_argument);  // phi not a member
}

TEST_CASE("complement_pattern") {
  CHECK(complement_pattern(parse_perm("1^1,3^2,2^1", 2)) ==
        parse_perm("3^1,1^2,2^1", 2));

  SUBCASE("involution on all of S_3^(2)") {
    int seen = 0;
    for (const ColouredPermutation& phi : enumerate_all(3, 2)) {
      CHECK(complement_pattern(complement_pattern(phi)) == phi);
      ++seen;
    }
    CHECK(seen == 48);
  }

  SUBCASE("maps the m=1 family onto the m=k family") {
    const ColourSet I1({1}, 2);
    const PatternSet T1 = build_T(2, 2, 1, I1);
    const PatternSet T2 = build_T(2, 2, 2, I1);
    std::set<ColouredPermutation> image;
    for (const ColouredPermutation& phi : T1.patterns()) {
      image.insert(complement_pattern(phi));
    }
    CHECK(image == std::set<ColouredPermutation>(T2.patterns().begin(),
                                                 T2.patterns().end()));
  }
}

TEST_CASE("PatternSet normalization and validation") {
  const ColouredPermutation p = parse_perm("1^1,2^1", 2);
  const PatternSet dup(2, {p, p, parse_perm("2^1,1^1", 2)}, "dup");
  CHECK(dup.size() == 2);  // duplicates collapse
  CHECK(std::is_sorted(dup.patterns().begin(), dup.patterns().end()));

  CHECK_THROWS_AS(PatternSet(2, {parse_perm("1^1", 1)}, "bad"),
                  std::invalid_argument);  // rank mismatch

  SUBCASE("d=0 gives the empty family") {
    CHECK(build_T(2, 2, 1, ColourSet::first(0, 2)).empty());
  }

  SUBCASE("without") {
    const PatternSet T = build_T(2, 2, 1, ColourSet({1}, 2));
    CHECK(T.without(T.patterns()[0]).size() == 1);
  }
}
