#ifndef COLPERM_PATTERN_SET_HPP
#define COLPERM_PATTERN_SET_HPP

#include <string>
#include <vector>

#include "colperm/perm.hpp"

namespace colperm {

// A subset I of the colours {1..r}. d = |I| may be 0; the pattern families
// built from an empty set are empty, which keeps the counting formulas
// testable at the d=0 boundary.
class ColourSet {
 public:
  ColourSet(std::vector<int> members, int rank);

  // {1..d} inside {1..r}, the canonical representative of size d.
  static ColourSet first(int d, int rank);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains_colour(int colour) const;
  std::string to_string() const;  // "{1,2}"

  friend bool operator==(const ColourSet&, const ColourSet&) = default;

 private:
  std::vector<int> members_;  // sorted, deduplicated
  int rank_ = 1;
};

// A finite set of coloured patterns sharing one rank, held in canonical
// sorted order (lexicographic on the (symbol, colour) token lists) so that
// streams and reports derived from it are deterministic.
//
// The family constructors below always produce patterns of one common
// length; sets loaded from files may mix lengths and the counters accept
// that.
class PatternSet {
 public:
  PatternSet(int rank, std::vector<ColouredPermutation> patterns,
             std::string tag);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(patterns_.size()); }
  bool empty() const { return patterns_.empty(); }
  const std::vector<ColouredPermutation>& patterns() const {
    return patterns_;
  }
  const std::string& tag() const { return tag_; }

  bool contains_pattern(const ColouredPermutation& pattern) const;
  PatternSet without(const ColouredPermutation& pattern) const;

 private:
  std::vector<ColouredPermutation> patterns_;
  int rank_ = 1;
  std::string tag_;
};

// All patterns in S_k^(r) whose first element is the symbol m carrying a
// colour from I. Built by direct product construction: d first colours x
// (k-1)! orderings of the remaining symbols x r^(k-1) colourings. Size is
// d * (k-1)! * r^(k-1).
PatternSet build_T(int k, int r, int m, const ColourSet& I);

// Union of build_T(k, r, m, I) over m = a..b.
PatternSet build_T_union(int k, int r, int a, int b, const ColourSet& I);

// build_T(k, r, m, I) with the single pattern phi removed; phi must be a
// member.
PatternSet build_M(int k, int r, int m, const ColourSet& I,
                   const ColouredPermutation& phi);

// Symbol at each position i becomes k+1-|phi_i|; colours stay in place.
// An involution; sends first-symbol-m patterns to first-symbol-(k+1-m)
// patterns with the same first colour.
ColouredPermutation complement_pattern(const ColouredPermutation& phi);

}  // namespace colperm

#endif  // COLPERM_PATTERN_SET_HPP
