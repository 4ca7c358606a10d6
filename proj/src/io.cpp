#include "colperm/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace colperm {

namespace {

std::string strip(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

int parse_int_field(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed value '" + value + "' for field '" + key +
                     "' in set spec");
  }
}

}  // namespace

PatternSet parse_pattern_lines(std::istream& in, std::optional<int> rank,
                               std::string tag) {
  std::vector<ColouredPermutation> raw;
  std::string line;
  int line_no = 0;
  int max_colour = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      ColouredPermutation p = parse_perm(body, rank);
      for (const Element& e : p.elements()) {
        max_colour = std::max(max_colour, e.colour);
      }
      raw.push_back(std::move(p));
    } catch (const ParseError& ex) {
      throw ParseError("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  const int effective_rank = rank.value_or(max_colour);
  std::vector<ColouredPermutation> patterns;
  patterns.reserve(raw.size());
  for (ColouredPermutation& p : raw) {
    // re-anchor every pattern at the common rank
    patterns.emplace_back(p.elements(), effective_rank);
  }
  return PatternSet(effective_rank, std::move(patterns), std::move(tag));
}

PatternSet load_pattern_file(const std::string& path,
                             std::optional<int> rank) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pattern file '" + path + "'");
  return parse_pattern_lines(in, rank, "@" + path);
}

namespace {

PatternSet parse_family_spec(const std::string& body, bool is_union,
                             std::optional<int> expect_rank,
                             const std::string& full_spec) {
  std::map<std::string, std::string> fields;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    const std::string part =
        body.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("malformed field '" + part + "' in set spec '" +
                       full_spec + "'");
    }
    fields[part.substr(0, eq)] = part.substr(eq + 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  auto need = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw ParseError("set spec '" + full_spec + "' is missing field '" +
                       key + "'");
    }
    return it->second;
  };

  const int k = parse_int_field(need("k"), "k");
  const int r = parse_int_field(need("r"), "r");
  if (expect_rank && r != *expect_rank) {
    throw ParseError("set spec rank r=" + std::to_string(r) +
                     " disagrees with --r " + std::to_string(*expect_rank));
  }
  std::vector<int> colours;
  {
    const std::string& iv = need("I");
    std::size_t pos = 0;
    while (pos <= iv.size()) {
      std::size_t bar = iv.find('|', pos);
      const std::string tok =
          iv.substr(pos, bar == std::string::npos ? std::string::npos
                                                  : bar - pos);
      if (!tok.empty()) colours.push_back(parse_int_field(tok, "I"));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
  }
  ColourSet I = [&] {
    try {
      return ColourSet(std::move(colours), r);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string(ex.what()) + " in set spec '" + full_spec +
                       "'");
    }
  }();

  try {
    if (is_union) {
      const int a = parse_int_field(need("a"), "a");
      const int b = parse_int_field(need("b"), "b");
      return build_T_union(k, r, a, b, I);
    }
    const int m = parse_int_field(need("m"), "m");
    return build_T(k, r, m, I);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string(ex.what()) + " in set spec '" + full_spec +
                     "'");
  }
}

}  // namespace

PatternSet parse_set_spec(const std::string& spec,
                          std::optional<int> expect_rank) {
  if (spec.empty()) throw ParseError("empty pattern-set spec");
  if (spec.front() == '@') {
    return load_pattern_file(spec.substr(1), expect_rank);
  }
  if (spec.rfind("T:", 0) == 0) {
    return parse_family_spec(spec.substr(2), false, expect_rank, spec);
  }
  if (spec.rfind("U:", 0) == 0) {
    return parse_family_spec(spec.substr(2), true, expect_rank, spec);
  }
  throw ParseError("pattern-set spec must start with 'T:', 'U:' or '@': '" +
                   spec + "'");
}

nlohmann::json count_report_json(const CountReport& report) {
  return nlohmann::json{{"n", report.n},
                        {"r", report.r},
                        {"tag", report.tag},
                        {"count", report.count.str()},
                        {"states_visited", report.states_visited.str()}};
}

nlohmann::json verification_report_json(const VerificationReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const VerifyCell& c : report.cells) {
    nlohmann::json params{{"theorem", c.theorem}, {"k", c.k}, {"r", c.r},
                          {"d", c.d},             {"n", c.n},
                          {"I", c.colours}};
    if (c.m) params["m"] = *c.m;
    if (c.a) params["a"] = *c.a;
    if (c.b) params["b"] = *c.b;
    if (c.phi) params["phi"] = *c.phi;
    cells.push_back(nlohmann::json{{"params", std::move(params)},
                                   {"formula", c.formula.str()},
                                   {"oracle", c.oracle.str()},
                                   {"match", c.match},
                                   {"skipped", c.skipped},
                                   {"states", c.states.str()},
                                   {"ms", c.ms}});
  }
  const VerifySummary s = report.summary();
  return nlohmann::json{
      {"grid", {{"theorem", report.theorem}, {"bounds", report.bounds}}},
      {"cells", std::move(cells)},
      {"summary",
       {{"cells", s.cells},
        {"mismatches", s.mismatches},
        {"skipped", s.skipped}}}};
}

}  // namespace colperm
