#include "colperm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "colperm/bijections.hpp"

namespace colperm {

namespace {

bool keep_value(int v, const std::optional<int>& fixed,
                const std::optional<int>& cap) {
  if (fixed && v != *fixed) return false;
  if (cap && v > *cap) return false;
  return true;
}

// Nonempty subsets of {1..r}, ordered by (size, lexicographic members).
std::vector<ColourSet> nonempty_subsets(int r) {
  std::vector<std::vector<int>> raw;
  for (int mask = 1; mask < (1 << r); ++mask) {
    std::vector<int> members;
    for (int c = 1; c <= r; ++c) {
      if (mask & (1 << (c - 1))) members.push_back(c);
    }
    raw.push_back(std::move(members));
  }
  std::sort(raw.begin(), raw.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  std::vector<ColourSet> out;
  out.reserve(raw.size());
  for (auto& members : raw) out.emplace_back(std::move(members), r);
  return out;
}

// Two distinct colour sets per size where {1..3} offers them, to assert
// that counts depend on I only through d.
std::vector<ColourSet> independence_sets_r3() {
  return {ColourSet({1}, 3), ColourSet({2}, 3), ColourSet({1, 2}, 3),
          ColourSet({1, 3}, 3), ColourSet({1, 2, 3}, 3)};
}

struct PendingCell {
  VerifyCell cell;
  ColourSet I{{}, 1};
  std::optional<ColouredPermutation> phi;
};

PendingCell make_cell(const std::string& theorem, int k, int r,
                      const ColourSet& I, int n) {
  PendingCell p;
  p.cell.theorem = theorem;
  p.cell.k = k;
  p.cell.r = r;
  p.cell.d = I.size();
  p.cell.n = n;
  p.cell.colours = I.to_string();
  p.I = I;
  return p;
}

void gen_thm1(const GridBounds& b, std::vector<PendingCell>& out) {
  for (int r = 1; r <= 2; ++r) {
    if (!keep_value(r, b.r, b.max_r)) continue;
    const int nmax = r == 1 ? 6 : 5;
    for (int k = 1; k <= 3; ++k) {
      if (!keep_value(k, b.k, b.max_k)) continue;
      for (const ColourSet& I : nonempty_subsets(r)) {
        if (b.d && I.size() != *b.d) continue;
        for (int m = 1; m <= k; ++m) {
          if (b.m && m != *b.m) continue;
          for (int n = 0; n <= nmax; ++n) {
            if (!keep_value(n, b.n, b.max_n)) continue;
            PendingCell p = make_cell("thm1", k, r, I, n);
            p.cell.m = m;
            out.push_back(std::move(p));
          }
        }
      }
    }
  }
  // r = 3 block with two colour sets per size, asserting I-independence
  if (keep_value(3, b.r, b.max_r)) {
    for (int k = 1; k <= 3; ++k) {
      if (!keep_value(k, b.k, b.max_k)) continue;
      for (const ColourSet& I : independence_sets_r3()) {
        if (b.d && I.size() != *b.d) continue;
        for (int m = 1; m <= k; ++m) {
          if (b.m && m != *b.m) continue;
          for (int n = 0; n <= 4; ++n) {
            if (!keep_value(n, b.n, b.max_n)) continue;
            PendingCell p = make_cell("thm1", k, 3, I, n);
            p.cell.m = m;
            out.push_back(std::move(p));
          }
        }
      }
    }
  }
}

void gen_cor_union(const GridBounds& b, std::vector<PendingCell>& out) {
  for (int r = 1; r <= 2; ++r) {
    if (!keep_value(r, b.r, b.max_r)) continue;
    for (int k = 2; k <= 3; ++k) {
      if (!keep_value(k, b.k, b.max_k)) continue;
      for (int d = 1; d <= r; ++d) {
        if (b.d && d != *b.d) continue;
        const ColourSet I = ColourSet::first(d, r);
        for (int a = 1; a <= k; ++a) {
          if (b.a && a != *b.a) continue;
          for (int bb = a; bb <= k; ++bb) {
            if (b.b && bb != *b.b) continue;
            for (int n = 0; n <= 5; ++n) {
              if (!keep_value(n, b.n, b.max_n)) continue;
              PendingCell p = make_cell("cor-union", k, r, I, n);
              p.cell.a = a;
              p.cell.b = bb;
              out.push_back(std::move(p));
            }
          }
        }
      }
    }
  }
}

void gen_cor_full(const GridBounds& b, std::vector<PendingCell>& out) {
  for (int r = 1; r <= 2; ++r) {
    if (!keep_value(r, b.r, b.max_r)) continue;
    for (int k = 2; k <= 3; ++k) {
      if (!keep_value(k, b.k, b.max_k)) continue;
      for (int d = 1; d <= r; ++d) {
        if (b.d && d != *b.d) continue;
        const ColourSet I = ColourSet::first(d, r);
        for (int n = 0; n <= 5; ++n) {
          if (!keep_value(n, b.n, b.max_n)) continue;
          out.push_back(make_cell("cor-full", k, r, I, n));
        }
      }
    }
  }
}

void gen_thm2(const GridBounds& b, std::vector<PendingCell>& out) {
  for (int r = 1; r <= 2; ++r) {
    if (!keep_value(r, b.r, b.max_r)) continue;
    for (int k = 2; k <= 3; ++k) {
      if (!keep_value(k, b.k, b.max_k)) continue;
      for (int d = 1; d <= r; ++d) {
        if (b.d && d != *b.d) continue;
        const ColourSet I = ColourSet::first(d, r);
        for (int mpos : {1, k}) {
          if (b.m && mpos != *b.m) continue;
          const PatternSet T = build_T(k, r, mpos, I);
          for (int n = k; n <= 5; ++n) {
            if (!keep_value(n, b.n, b.max_n)) continue;
            for (const ColouredPermutation& phi : T.patterns()) {
              PendingCell p = make_cell("thm2", k, r, I, n);
              p.cell.m = mpos;
              p.cell.phi = format_perm(phi);
              p.phi = phi;
              out.push_back(std::move(p));
            }
          }
        }
      }
    }
  }
}

void gen_thm3(const GridBounds& b, std::vector<PendingCell>& out) {
  const int k = 3;
  if (!keep_value(k, b.k, b.max_k)) return;
  const int m = 2;
  if (b.m && m != *b.m) return;
  for (int r = 1; r <= 2; ++r) {
    if (!keep_value(r, b.r, b.max_r)) continue;
    for (int d = 1; d <= r; ++d) {
      if (b.d && d != *b.d) continue;
      const ColourSet I = ColourSet::first(d, r);
      const PatternSet T = build_T(k, r, m, I);
      for (int n = k; n <= 5; ++n) {
        if (!keep_value(n, b.n, b.max_n)) continue;
        for (const ColouredPermutation& phi : T.patterns()) {
          PendingCell p = make_cell("thm3", k, r, I, n);
          p.cell.m = m;
          p.cell.phi = format_perm(phi);
          p.phi = phi;
          out.push_back(std::move(p));
        }
      }
    }
  }
}

VerifyCell evaluate(const PendingCell& pending,
                    const EnumerationBudget& budget) {
  VerifyCell cell = pending.cell;
  const FamilyParams params{cell.k, cell.r, cell.d,
                            cell.m.value_or(1)};
  const auto start = std::chrono::steady_clock::now();
  try {
    CountReport oracle;
    if (cell.theorem == "thm1") {
      cell.formula = thm1_count(cell.n, params);
      oracle = count_avoiders(
          cell.n, cell.r, build_T(cell.k, cell.r, *cell.m, pending.I), budget);
      cell.match = cell.formula == oracle.count;
    } else if (cell.theorem == "cor-union") {
      cell.formula = cor_union_count(cell.n, *cell.a, *cell.b, params);
      oracle = count_avoiders(
          cell.n, cell.r,
          build_T_union(cell.k, cell.r, *cell.a, *cell.b, pending.I), budget);
      cell.match = cell.formula == oracle.count;
    } else if (cell.theorem == "cor-full") {
      const BigCount via_union = cor_union_count(cell.n, 1, cell.k, params);
      bool identity_ok = true;
      if (cell.n >= cell.k) {
        cell.formula = cor_full_union_count(cell.n, params);
        identity_ok = cell.formula == via_union;
      } else {
        cell.formula = via_union;  // n < k convention lives in the union form
      }
      oracle = count_avoiders(
          cell.n, cell.r, build_T_union(cell.k, cell.r, 1, cell.k, pending.I),
          budget);
      cell.match = identity_ok && cell.formula == oracle.count;
    } else if (cell.theorem == "thm2") {
      cell.formula = thm2_count(cell.n, params);
      oracle = count_exactly_once(
          cell.n, cell.r, build_T(cell.k, cell.r, *cell.m, pending.I),
          *pending.phi, budget);
      cell.match = cell.formula == oracle.count;
    } else if (cell.theorem == "thm3") {
      cell.formula = thm3_count(cell.n, params);
      oracle = count_exactly_once(
          cell.n, cell.r, build_T(cell.k, cell.r, *cell.m, pending.I),
          *pending.phi, budget);
      cell.match = cell.formula == oracle.count;
    } else {
      throw std::logic_error("unknown theorem cell: " + cell.theorem);
    }
    cell.oracle = oracle.count;
    cell.states = oracle.states_visited;
  } catch (const BudgetExceeded&) {
    cell.skipped = true;
    cell.match = false;
  }
  const auto stop = std::chrono::steady_clock::now();
  cell.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return cell;
}

std::string describe_bounds(const GridBounds& b) {
  std::ostringstream out;
  auto emit = [&](const char* name, const std::optional<int>& v) {
    if (v) out << (out.tellp() > 0 ? " " : "") << name << "=" << *v;
  };
  emit("k", b.k);
  emit("r", b.r);
  emit("d", b.d);
  emit("n", b.n);
  emit("m", b.m);
  emit("a", b.a);
  emit("b", b.b);
  emit("max-k", b.max_k);
  emit("max-r", b.max_r);
  emit("max-n", b.max_n);
  std::string s = out.str();
  return s.empty() ? "default desk-scale grid" : s;
}

}  // namespace

Theorem theorem_from_name(const std::string& name) {
  if (name == "thm1") return Theorem::thm1;
  if (name == "cor-union") return Theorem::cor_union;
  if (name == "cor-full") return Theorem::cor_full;
  if (name == "thm2") return Theorem::thm2;
  if (name == "thm3") return Theorem::thm3;
  if (name == "all") return Theorem::all;
  throw std::invalid_argument("unknown theorem '" + name + "'");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::thm1: return "thm1";
    case Theorem::cor_union: return "cor-union";
    case Theorem::cor_full: return "cor-full";
    case Theorem::thm2: return "thm2";
    case Theorem::thm3: return "thm3";
    case Theorem::all: return "all";
  }
  throw std::logic_error("unreachable");
}

VerifySummary VerificationReport::summary() const {
  VerifySummary s;
  s.cells = static_cast<int>(cells.size());
  for (const VerifyCell& c : cells) {
    if (c.skipped) {
      ++s.skipped;
    } else if (!c.match) {
      ++s.mismatches;
    }
  }
  return s;
}

bool VerificationReport::all_match() const {
  const VerifySummary s = summary();
  return s.mismatches == 0 && s.skipped == 0;
}

VerificationReport verify_theorem(Theorem t, const GridBounds& bounds,
                                  const EnumerationBudget& budget) {
  VerificationReport rep;
  rep.theorem = theorem_name(t);
  rep.bounds = describe_bounds(bounds);

  std::vector<PendingCell> pending;
  switch (t) {
    case Theorem::thm1: gen_thm1(bounds, pending); break;
    case Theorem::cor_union: gen_cor_union(bounds, pending); break;
    case Theorem::cor_full: gen_cor_full(bounds, pending); break;
    case Theorem::thm2: gen_thm2(bounds, pending); break;
    case Theorem::thm3: gen_thm3(bounds, pending); break;
    case Theorem::all:
      gen_thm1(bounds, pending);
      gen_cor_union(bounds, pending);
      gen_cor_full(bounds, pending);
      gen_thm2(bounds, pending);
      gen_thm3(bounds, pending);
      break;
  }

  rep.cells.resize(pending.size());
  std::atomic<bool> internal_error{false};
  const int total = static_cast<int>(pending.size());
  // independent cells; report keeps generation order regardless of schedule
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < total; ++i) {
    try {
      rep.cells[static_cast<std::size_t>(i)] =
          evaluate(pending[static_cast<std::size_t>(i)], budget);
    } catch (...) {
      internal_error.store(true, std::memory_order_relaxed);
    }
  }
  if (internal_error.load()) {
    throw std::runtime_error("internal error while evaluating grid cells");
  }
  return rep;
}

namespace {

bool avoids_all(const ColouredPermutation& psi, const PatternSet& T) {
  for (const ColouredPermutation& pat : T.patterns()) {
    if (contains(psi, pat)) return false;
  }
  return true;
}

CheckResult check_round_trip() {
  CheckResult res{"insert/delete round trip", true, ""};
  long long checked = 0;
  for (auto [r, nmax] : {std::pair{2, 4}, std::pair{1, 5}}) {
    for (int n = 0; n <= nmax; ++n) {
      for (const ColouredPermutation& beta : enumerate_all(n, r)) {
        if (n >= 1) {
          // delete then insert reproduces the input
          const SymbolOneRemoval rem = delete_symbol_one(beta);
          if (insert_symbol_one(rem.rest, rem.position, rem.colour) != beta) {
            res.pass = false;
            res.detail = "delete/insert failed on " + format_perm(beta);
            return res;
          }
        }
        if (n < nmax) {
          // insert then delete recovers permutation, position and colour
          for (int pos = 1; pos <= n + 1; ++pos) {
            for (int c = 1; c <= r; ++c) {
              const ColouredPermutation gamma =
                  insert_symbol_one(beta, pos, c);
              const SymbolOneRemoval rem = delete_symbol_one(gamma);
              if (rem.rest != beta || rem.position != pos ||
                  rem.colour != c) {
                res.pass = false;
                res.detail = "insert/delete failed on " + format_perm(beta);
                return res;
              }
              ++checked;
            }
          }
        }
      }
    }
  }
  res.detail = std::to_string(checked) + " insertions round-tripped";
  return res;
}

CheckResult check_complement_involution() {
  CheckResult res{"complement involution", true, ""};
  long long checked = 0;
  for (auto [r, nmax] : {std::pair{2, 4}, std::pair{1, 5}}) {
    for (int n = 0; n <= nmax; ++n) {
      for (const ColouredPermutation& psi : enumerate_all(n, r)) {
        if (complement_perm(complement_perm(psi)) != psi) {
          res.pass = false;
          res.detail = "involution failed on " + format_perm(psi);
          return res;
        }
        ++checked;
      }
    }
  }
  res.detail = std::to_string(checked) + " permutations";
  return res;
}

CheckResult check_complement_transport() {
  CheckResult res{"complement occurrence transport", true, ""};
  long long checked = 0;
  const auto hosts = enumerate_all(4, 2);
  const auto patterns = enumerate_all(2, 2);
  for (const ColouredPermutation& psi : hosts) {
    for (const ColouredPermutation& phi : patterns) {
      if (count_occurrences(psi, phi) !=
          count_occurrences(complement_perm(psi), complement_pattern(phi))) {
        res.pass = false;
        res.detail = "transport failed for host " + format_perm(psi) +
                     " pattern " + format_perm(phi);
        return res;
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " host/pattern pairs (n=4, k=2)";
  return res;
}

// The avoider-preserving prefix insertions, determined exhaustively, must
// be exactly: any h for colours outside I, and h <= m-1 or h >= n+m-k+2
// for colours in I, giving (k-1)d + (r-d)(n+1) per avoider.
CheckResult check_admissible_prefix() {
  CheckResult res{"admissible prefix insertions", true, ""};
  long long checked = 0;
  struct Case {
    int k, r, d, n;
  };
  for (const Case cs : {Case{2, 2, 1, 3}, Case{3, 1, 1, 4}}) {
    const ColourSet I = ColourSet::first(cs.d, cs.r);
    for (int m = 1; m <= cs.k; ++m) {
      const PatternSet T = build_T(cs.k, cs.r, m, I);
      const auto avoiders = list_avoiders(cs.n, cs.r, T);
      if (avoiders.empty()) {
        res.pass = false;
        res.detail = "no avoiders for " + T.tag();
        return res;
      }
      const long long expected =
          static_cast<long long>(cs.k - 1) * cs.d +
          static_cast<long long>(cs.r - cs.d) * (cs.n + 1);
      for (const ColouredPermutation& psi : avoiders) {
        long long admissible = 0;
        for (int h = 1; h <= cs.n + 1; ++h) {
          for (int c = 1; c <= cs.r; ++c) {
            const bool keeps =
                avoids_all(insert_prefix(psi, h, c), T);
            const bool predicted =
                !I.contains_colour(c) ||
                (h <= m - 1 || h >= cs.n + m - cs.k + 2);
            if (keeps != predicted) {
              res.pass = false;
              res.detail = "prediction failed at " + T.tag() + " psi=" +
                           format_perm(psi) + " h=" + std::to_string(h) +
                           " c=" + std::to_string(c);
              return res;
            }
            if (keeps) ++admissible;
            ++checked;
          }
        }
        if (admissible != expected) {
          res.pass = false;
          res.detail = "count " + std::to_string(admissible) + " != " +
                       std::to_string(expected) + " for " + format_perm(psi);
          return res;
        }
      }
    }
  }
  res.detail = std::to_string(checked) + " insertions classified";
  return res;
}

// Exactly-once containers whose first element is n-k+1 with a colour in I,
// the class the symbol-1 insertion acts on.
std::vector<ColouredPermutation> exactly_once_class(int n, int k,
                                                    const ColourSet& I,
                                                    const PatternSet& T,
                                                    const ColouredPermutation&
                                                        phi) {
  std::vector<ColouredPermutation> out;
  for (const ColouredPermutation& psi : enumerate_all(n, I.rank())) {
    if (psi.symbol_at(1) != n - k + 1) continue;
    if (!I.contains_colour(psi.colour_at(1))) continue;
    if (count_occurrences(psi, phi) != 1) continue;
    bool blocked = false;
    for (const ColouredPermutation& pat : T.patterns()) {
      if (pat == phi) continue;
      if (contains(psi, pat)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back(psi);
  }
  return out;
}

// Growth of the exactly-once class under symbol-1 insertion: each member
// of the class at size n admits exactly h_n insertions staying in the
// class at size n+1 (colours outside I anywhere but the front, colours in
// I only in the last k-1 slots), the images are distinct and cover the
// class at n+1, and deletion maps back into the class.
CheckResult check_exactly_once_closure() {
  CheckResult res{"exactly-once insertion closure", true, ""};
  const int k = 2, r = 2, d = 1;
  const ColourSet I = ColourSet::first(d, r);
  const PatternSet T = build_T(k, r, 1, I);
  const FamilyParams params{k, r, d, 1};
  for (const ColouredPermutation& phi : T.patterns()) {
    std::map<int, std::vector<ColouredPermutation>> cls;
    for (int n = 2; n <= 5; ++n) {
      cls[n] = exactly_once_class(n, k, I, T, phi);
    }
    if (cls[2].size() != 1) {
      res.pass = false;
      res.detail = "base class not a singleton for phi=" + format_perm(phi);
      return res;
    }
    for (int n = 3; n <= 4; ++n) {
      const BigCount hn = factor_h(n, params);
      if (BigCount(cls[n + 1].size()) != hn * cls[n].size()) {
        res.pass = false;
        res.detail = "|A(" + std::to_string(n + 1) + ")| != h_n * |A(" +
                     std::to_string(n) + ")| for phi=" + format_perm(phi);
        return res;
      }
      const std::set<ColouredPermutation> next(cls[n + 1].begin(),
                                               cls[n + 1].end());
      std::set<ColouredPermutation> images;
      for (const ColouredPermutation& beta : cls[n]) {
        long long admissible = 0;
        for (int pos = 1; pos <= n + 1; ++pos) {
          for (int c = 1; c <= r; ++c) {
            const ColouredPermutation gamma = insert_symbol_one(beta, pos, c);
            const bool member = next.count(gamma) > 0;
            const bool predicted = I.contains_colour(c)
                                       ? pos >= n - k + 3
                                       : pos >= 2;
            if (member != predicted) {
              res.pass = false;
              res.detail = "insertion prediction failed at beta=" +
                           format_perm(beta) + " pos=" + std::to_string(pos) +
                           " c=" + std::to_string(c);
              return res;
            }
            if (member) {
              ++admissible;
              images.insert(gamma);
            }
          }
        }
        if (BigCount(admissible) != hn) {
          res.pass = false;
          res.detail = "admissible insertions != h_n at beta=" +
                       format_perm(beta);
          return res;
        }
      }
      if (images != next) {
        res.pass = false;
        res.detail = "insertion images do not cover the class at n=" +
                     std::to_string(n + 1);
        return res;
      }
      for (const ColouredPermutation& gamma : cls[n + 1]) {
        const SymbolOneRemoval rem = delete_symbol_one(gamma);
        if (!std::binary_search(cls[n].begin(), cls[n].end(), rem.rest)) {
          // cls[n] comes from the canonical enumeration, hence sorted
          res.pass = false;
          res.detail = "deletion left the class at gamma=" +
                       format_perm(gamma);
          return res;
        }
      }
    }
  }
  res.detail = "class growth h_n verified at k=2, r=2, d=1, n=3..4";
  return res;
}

}  // namespace

std::vector<CheckResult> bijection_checks() {
  return {check_round_trip(), check_complement_involution(),
          check_complement_transport(), check_admissible_prefix(),
          check_exactly_once_closure()};
}

}  // namespace colperm
