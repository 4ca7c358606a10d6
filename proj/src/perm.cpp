#include "colperm/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace colperm {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_positive_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) {
    throw ParseError("malformed " + std::string(what) + ": '" +
                     std::string(s) + "'");
  }
  return value;
}

}  // namespace

ColouredPermutation::ColouredPermutation(std::vector<Element> elements,
                                         int rank)
    : elements_(std::move(elements)), rank_(rank) {
  check_rank(rank_);
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const Element& e : elements_) {
    if (e.symbol < 1 || e.symbol > n) {
      throw std::invalid_argument("symbol " + std::to_string(e.symbol) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(e.symbol)]) {
      throw std::invalid_argument("duplicate symbol " +
                                  std::to_string(e.symbol));
    }
    seen[static_cast<std::size_t>(e.symbol)] = true;
    if (e.colour < 1 || e.colour > rank_) {
      throw std::invalid_argument("colour " + std::to_string(e.colour) +
                                  " outside 1.." + std::to_string(rank_));
    }
  }
}

const Element& ColouredPermutation::element_at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw std::out_of_range("position " + std::to_string(pos) +
                            " outside 1.." + std::to_string(size()));
  }
  return elements_[static_cast<std::size_t>(pos - 1)];
}

std::vector<int> ColouredPermutation::absolute() const {
  std::vector<int> symbols;
  symbols.reserve(elements_.size());
  for (const Element& e : elements_) symbols.push_back(e.symbol);
  return symbols;
}

Occurrence::Occurrence(std::vector<int> idx) : indices(std::move(idx)) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || (i > 0 && indices[i] <= indices[i - 1])) {
      throw std::invalid_argument(
          "occurrence indices must be strictly increasing and >= 1");
    }
  }
}

ColouredPermutation parse_perm(std::string_view text,
                               std::optional<int> rank) {
  text = trim(text);
  std::vector<Element> elements;
  if (!text.empty()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view token =
          trim(text.substr(start, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - start));
      std::size_t caret = token.find('^');
      if (token.empty() || caret == std::string_view::npos) {
        throw ParseError("malformed token '" + std::string(token) +
                         "' (expected s^c)");
      }
      Element e;
      e.symbol = parse_positive_int(token.substr(0, caret), "symbol");
      e.colour = parse_positive_int(token.substr(caret + 1), "colour");
      elements.push_back(e);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  int effective_rank = 1;
  if (rank) {
    effective_rank = *rank;
    check_rank(effective_rank);
    for (const Element& e : elements) {
      if (e.colour > effective_rank) {
        throw ParseError("colour " + std::to_string(e.colour) +
                         " exceeds declared rank " +
                         std::to_string(effective_rank));
      }
    }
  } else {
    for (const Element& e : elements) {
      effective_rank = std::max(effective_rank, e.colour);
    }
  }

  try {
    return ColouredPermutation(std::move(elements), effective_rank);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

std::string format_perm(const ColouredPermutation& perm) {
  std::ostringstream out;
  bool first = true;
  for (const Element& e : perm.elements()) {
    if (!first) out << ',';
    out << e.symbol << '^' << e.colour;
    first = false;
  }
  return out.str();
}

bool is_occurrence(const ColouredPermutation& host,
                   const ColouredPermutation& pattern, const Occurrence& occ) {
  if (host.rank() != pattern.rank()) {
    throw std::invalid_argument("rank mismatch between host and pattern");
  }
  const int k = pattern.size();
  if (occ.length() != k) {
    throw std::invalid_argument("occurrence length differs from pattern");
  }
  for (int idx : occ.indices) {
    if (idx < 1 || idx > host.size()) {
      throw std::out_of_range("occurrence index outside host");
    }
  }
  for (int j = 1; j <= k; ++j) {
    const Element& h = host.element_at(occ.indices[j - 1]);
    if (h.colour != pattern.colour_at(j)) return false;
    for (int i = 1; i < j; ++i) {
      const Element& g = host.element_at(occ.indices[i - 1]);
      if ((g.symbol < h.symbol) != (pattern.symbol_at(i) < pattern.symbol_at(j))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Extends a partial embedding one pattern slot at a time; prunes on the
// first colour or pairwise-order failure. `chosen` holds host positions
// (0-based) for pattern slots 0..slot-1.
void count_embeddings(const std::vector<Element>& host,
                      const std::vector<Element>& pat, int slot,
                      std::vector<int>& chosen, BigCount& total) {
  const int k = static_cast<int>(pat.size());
  const int n = static_cast<int>(host.size());
  if (slot == k) {
    ++total;
    return;
  }
  int from = slot == 0 ? 0 : chosen[static_cast<std::size_t>(slot) - 1] + 1;
  for (int pos = from; pos <= n - (k - slot); ++pos) {
    const Element& h = host[static_cast<std::size_t>(pos)];
    if (h.colour != pat[static_cast<std::size_t>(slot)].colour) continue;
    bool consistent = true;
    for (int j = 0; j < slot; ++j) {
      const Element& g = host[static_cast<std::size_t>(chosen[j])];
      if ((g.symbol < h.symbol) !=
          (pat[static_cast<std::size_t>(j)].symbol <
           pat[static_cast<std::size_t>(slot)].symbol)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen[static_cast<std::size_t>(slot)] = pos;
    count_embeddings(host, pat, slot + 1, chosen, total);
  }
}

// Same search as count_embeddings but bails out at the first hit.
bool exists_embedding(const std::vector<Element>& host,
                      const std::vector<Element>& pat, int slot,
                      std::vector<int>& chosen) {
  const int k = static_cast<int>(pat.size());
  const int n = static_cast<int>(host.size());
  if (slot == k) return true;
  int from = slot == 0 ? 0 : chosen[static_cast<std::size_t>(slot) - 1] + 1;
  for (int pos = from; pos <= n - (k - slot); ++pos) {
    const Element& h = host[static_cast<std::size_t>(pos)];
    if (h.colour != pat[static_cast<std::size_t>(slot)].colour) continue;
    bool consistent = true;
    for (int j = 0; j < slot; ++j) {
      const Element& g = host[static_cast<std::size_t>(chosen[j])];
      if ((g.symbol < h.symbol) !=
          (pat[static_cast<std::size_t>(j)].symbol <
           pat[static_cast<std::size_t>(slot)].symbol)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen[static_cast<std::size_t>(slot)] = pos;
    if (exists_embedding(host, pat, slot + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

BigCount count_occurrences(const ColouredPermutation& host,
                           const ColouredPermutation& pattern) {
  if (host.rank() != pattern.rank()) {
    throw std::invalid_argument("rank mismatch between host and pattern");
  }
  if (pattern.size() > host.size()) return 0;
  BigCount total = 0;
  std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
  count_embeddings(host.elements(), pattern.elements(), 0, chosen, total);
  return total;
}

bool contains(const ColouredPermutation& host,
              const ColouredPermutation& pattern) {
  if (host.rank() != pattern.rank()) {
    throw std::invalid_argument("rank mismatch between host and pattern");
  }
  if (pattern.size() > host.size()) return false;
  std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
  return exists_embedding(host.elements(), pattern.elements(), 0, chosen);
}

bool avoids(const ColouredPermutation& host,
            const ColouredPermutation& pattern) {
  return !contains(host, pattern);
}

}  // namespace colperm
