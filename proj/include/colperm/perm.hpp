#ifndef COLPERM_PERM_HPP
#define COLPERM_PERM_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colperm/bigcount.hpp"

namespace colperm {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One coloured symbol s^(c). Symbols and colours are 1-based throughout,
// matching the usual convention for coloured permutations.
struct Element {
  int symbol = 0;
  int colour = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

// A permutation of the symbols 1..n where each symbol carries one of the
// colours 1..r. Immutable after construction; the constructor enforces that
// the symbols are exactly {1..n} and every colour lies in 1..rank.
//
// The rank r is stored on the object: colour identity is exact, so
// operations across different ranks are rejected rather than promoted.
class ColouredPermutation {
 public:
  ColouredPermutation() = default;  // empty permutation, rank 1
  ColouredPermutation(std::vector<Element> elements, int rank);

  int size() const { return static_cast<int>(elements_.size()); }
  int rank() const { return rank_; }
  bool empty() const { return elements_.empty(); }

  // 1-based position access.
  const Element& element_at(int pos) const;
  int symbol_at(int pos) const { return element_at(pos).symbol; }
  int colour_at(int pos) const { return element_at(pos).colour; }

  const std::vector<Element>& elements() const { return elements_; }

  // |phi|: the symbol sequence with colours stripped.
  std::vector<int> absolute() const;

  friend auto operator<=>(const ColouredPermutation& a,
                          const ColouredPermutation& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }
  friend bool operator==(const ColouredPermutation& a,
                         const ColouredPermutation& b) = default;

 private:
  std::vector<Element> elements_;
  int rank_ = 1;
};

// A strictly increasing sequence of 1-based positions into a host
// permutation; the candidate index set of a pattern occurrence.
struct Occurrence {
  std::vector<int> indices;

  Occurrence() = default;
  explicit Occurrence(std::vector<int> idx);

  int length() const { return static_cast<int>(indices.size()); }
};

// Text encoding: comma-separated `s^c` tokens, e.g. "1^1,3^2,2^1".
// This is the single canonical format used by files, the CLI, and reports.
// If rank is not given it is inferred as the maximum colour (at least 1).
ColouredPermutation parse_perm(std::string_view text,
                               std::optional<int> rank = std::nullopt);
std::string format_perm(const ColouredPermutation& perm);

// Containment test for one candidate index set: the subsequence of host at
// occ must be order-isomorphic to |pattern| and every colour must match the
// pattern's colour exactly.
bool is_occurrence(const ColouredPermutation& host,
                   const ColouredPermutation& pattern, const Occurrence& occ);

// Number of index sequences forming an occurrence of pattern in host.
// Exhaustive subsequence search with early pruning: a partial embedding is
// abandoned as soon as a colour or a pairwise order comparison fails.
BigCount count_occurrences(const ColouredPermutation& host,
                           const ColouredPermutation& pattern);

bool contains(const ColouredPermutation& host,
              const ColouredPermutation& pattern);
bool avoids(const ColouredPermutation& host,
            const ColouredPermutation& pattern);

}  // namespace colperm

#endif  // COLPERM_PERM_HPP
