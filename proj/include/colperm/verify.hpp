#ifndef COLPERM_VERIFY_HPP
#define COLPERM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "colperm/enumerate.hpp"
#include "colperm/formulas.hpp"

namespace colperm {

enum class Theorem { thm1, cor_union, cor_full, thm2, thm3, all };

Theorem theorem_from_name(const std::string& name);
std::string theorem_name(Theorem t);

// Restrictions on the default verification grid: exact values pin a
// dimension, max values clamp it. Unset fields keep the built-in
// desk-scale grid.
struct GridBounds {
  std::optional<int> k, r, d, n, m, a, b;
  std::optional<int> max_k, max_r, max_n;
};

// One formula-vs-oracle comparison. `phi` is set for the exactly-once
// theorems, `a`/`b` for the union corollary; skipped cells ran out of
// budget and are reported distinctly from mismatches.
struct VerifyCell {
  std::string theorem;
  int k = 0;
  int r = 0;
  int d = 0;
  int n = 0;
  std::optional<int> m, a, b;
  std::string colours;  // the concrete colour set, e.g. "{1,2}"
  std::optional<std::string> phi;
  BigCount formula;
  BigCount oracle;
  bool match = false;
  bool skipped = false;
  BigCount states;
  double ms = 0.0;
};

struct VerifySummary {
  int cells = 0;
  int mismatches = 0;
  int skipped = 0;
};

struct VerificationReport {
  std::string theorem;
  std::string bounds;  // human-readable description of the grid actually run
  std::vector<VerifyCell> cells;

  VerifySummary summary() const;
  bool all_match() const;
};

// Runs the desk-scale grid for one theorem (or all of them), comparing the
// closed form against the backtracking oracle cell by cell. For the
// exactly-once theorems every admissible phi gets its own cell, so
// phi-independence is asserted by the grid itself. Cells are evaluated
// concurrently when OpenMP is enabled; report order is canonical
// (generation order, sorted by parameters) regardless of schedule.
VerificationReport verify_theorem(Theorem t, const GridBounds& bounds = {},
                                  const EnumerationBudget& budget = {});

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The bijection battery: insertion/deletion round trips, complement
// involution and occurrence transport, the admissible prefix-insertion
// sets, and the exactly-once insertion closure.
std::vector<CheckResult> bijection_checks();

}  // namespace colperm

#endif  // COLPERM_VERIFY_HPP
