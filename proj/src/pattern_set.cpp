#include "colperm/pattern_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "colperm/bijections.hpp"

namespace colperm {

ColourSet::ColourSet(std::vector<int> members, int rank)
    : members_(std::move(members)), rank_(rank) {
  if (rank_ < 1) throw std::invalid_argument("rank must be >= 1");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int c : members_) {
    if (c < 1 || c > rank_) {
      throw std::invalid_argument("colour " + std::to_string(c) +
                                  " outside 1.." + std::to_string(rank_));
    }
  }
}

ColourSet ColourSet::first(int d, int rank) {
  if (d < 0 || d > rank) {
    throw std::invalid_argument("d must lie in 0..rank");
  }
  std::vector<int> members(static_cast<std::size_t>(d));
  std::iota(members.begin(), members.end(), 1);
  return ColourSet(std::move(members), rank);
}

bool ColourSet::contains_colour(int colour) const {
  return std::binary_search(members_.begin(), members_.end(), colour);
}

std::string ColourSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

PatternSet::PatternSet(int rank, std::vector<ColouredPermutation> patterns,
                       std::string tag)
    : patterns_(std::move(patterns)), rank_(rank), tag_(std::move(tag)) {
  if (rank_ < 1) throw std::invalid_argument("rank must be >= 1");
  for (const ColouredPermutation& p : patterns_) {
    if (p.rank() != rank_) {
      throw std::invalid_argument("pattern rank " + std::to_string(p.rank()) +
                                  " differs from set rank " +
                                  std::to_string(rank_));
    }
  }
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

bool PatternSet::contains_pattern(const ColouredPermutation& pattern) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), pattern);
}

PatternSet PatternSet::without(const ColouredPermutation& pattern) const {
  std::vector<ColouredPermutation> rest;
  rest.reserve(patterns_.size());
  for (const ColouredPermutation& p : patterns_) {
    if (p != pattern) rest.push_back(p);
  }
  return PatternSet(rank_, std::move(rest), tag_ + "\\{" +
                                                format_perm(pattern) + "}");
}

namespace {

void check_family_args(int k, int r, int m, const ColourSet& I) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (m < 1 || m > k) throw std::invalid_argument("m must lie in 1..k");
  if (I.rank() != r) {
    throw std::invalid_argument("colour set rank differs from r");
  }
}

// Appends every pattern with first element m^(c), c in I: each ordering of
// the remaining symbols, each colouring of the remaining positions.
void emit_family(int k, int r, int m, const ColourSet& I,
                 std::vector<ColouredPermutation>& out) {
  std::vector<int> rest;
  for (int s = 1; s <= k; ++s) {
    if (s != m) rest.push_back(s);
  }
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> colouring(rest.size(), 1);
    while (true) {
      for (int c : I.members()) {
        std::vector<Element> elems;
        elems.reserve(static_cast<std::size_t>(k));
        elems.push_back({m, c});
        for (std::size_t i = 0; i < rest.size(); ++i) {
          elems.push_back({rest[i], colouring[i]});
        }
        out.emplace_back(std::move(elems), r);
      }
      // next colouring, odometer style
      std::size_t pos = 0;
      while (pos < colouring.size() && colouring[pos] == r) {
        colouring[pos] = 1;
        ++pos;
      }
      if (pos == colouring.size()) break;
      ++colouring[pos];
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

PatternSet build_T(int k, int r, int m, const ColourSet& I) {
  check_family_args(k, r, m, I);
  std::vector<ColouredPermutation> patterns;
  emit_family(k, r, m, I, patterns);
  std::ostringstream tag;
  tag << "T(k=" << k << ",r=" << r << ",m=" << m << ",I=" << I.to_string()
      << ")";
  return PatternSet(r, std::move(patterns), tag.str());
}

PatternSet build_T_union(int k, int r, int a, int b, const ColourSet& I) {
  if (a < 1 || a > b || b > k) {
    throw std::invalid_argument("need 1 <= a <= b <= k");
  }
  check_family_args(k, r, a, I);
  std::vector<ColouredPermutation> patterns;
  for (int m = a; m <= b; ++m) emit_family(k, r, m, I, patterns);
  std::ostringstream tag;
  tag << "U(k=" << k << ",r=" << r << ",a=" << a << ",b=" << b
      << ",I=" << I.to_string() << ")";
  return PatternSet(r, std::move(patterns), tag.str());
}

PatternSet build_M(int k, int r, int m, const ColourSet& I,
                   const ColouredPermutation& phi) {
  PatternSet T = build_T(k, r, m, I);
  if (!T.contains_pattern(phi)) {
    throw std::invalid_argument("pattern " + format_perm(phi) +
                                " is not a member of " + T.tag());
  }
  std::ostringstream tag;
  tag << "M(k=" << k << ",r=" << r << ",m=" << m << ",I=" << I.to_string()
      << ";phi=" << format_perm(phi) << ")";
  std::vector<ColouredPermutation> rest;
  for (const ColouredPermutation& p : T.patterns()) {
    if (p != phi) rest.push_back(p);
  }
  return PatternSet(r, std::move(rest), tag.str());
}

ColouredPermutation complement_pattern(const ColouredPermutation& phi) {
  return complement_perm(phi);
}

}  // namespace colperm
