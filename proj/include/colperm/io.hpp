#ifndef COLPERM_IO_HPP
#define COLPERM_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "colperm/enumerate.hpp"
#include "colperm/pattern_set.hpp"
#include "colperm/verify.hpp"

namespace colperm {

// Pattern file format: UTF-8, one permutation per line in the canonical
// `s^c,...` encoding; `#` starts a comment line; blank lines are ignored.
// When no rank is given it is inferred as the largest colour in the file.
PatternSet parse_pattern_lines(std::istream& in, std::optional<int> rank,
                               std::string tag);
PatternSet load_pattern_file(const std::string& path,
                             std::optional<int> rank);

// CLI pattern-set specs:
//   T:k=K,r=R,m=M,I=c1|c2|...   one first-symbol family
//   U:k=K,r=R,a=A,b=B,I=...     union of families over m = a..b
//   @file.pat                   explicit set from a pattern file
// expect_rank, when set, must agree with the spec's own rank.
PatternSet parse_set_spec(const std::string& spec,
                          std::optional<int> expect_rank = std::nullopt);

// Counts serialize as decimal strings; they do not fit in JSON numbers.
nlohmann::json count_report_json(const CountReport& report);
nlohmann::json verification_report_json(const VerificationReport& report);

}  // namespace colperm

#endif  // COLPERM_IO_HPP
