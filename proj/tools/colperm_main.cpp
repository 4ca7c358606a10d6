// Command-line front end. Exit codes: 0 success / all match, 1 verification
// mismatch, 2 usage or parse error, 3 enumeration budget exceeded. Every
// subcommand is a thin wrapper over the library; no arithmetic happens here.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "colperm/bijections.hpp"
#include "colperm/enumerate.hpp"
#include "colperm/formulas.hpp"
#include "colperm/io.hpp"
#include "colperm/verify.hpp"

namespace {

constexpr std::int64_t kDefaultBudget = 500'000'000;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CountArgs {
  int n = 0;
  int r = 1;
  std::string set_spec;
  std::string engine = "pruned";
  std::string format = "plain";
  std::int64_t budget = kDefaultBudget;
};

struct FormulaArgs {
  std::string name;
  int n = 0;
  int k = 1;
  int r = 1;
  int d = 1;
  int m = 2;
  int a = 1;
  int b = 1;
};

struct SequenceArgs {
  FormulaArgs formula;
  int from = 0;
  int to = 0;
};

struct VerifyArgs {
  std::string name;
  colperm::GridBounds bounds;
  std::int64_t budget = kDefaultBudget;
  std::string json_path;
  bool quiet = false;
};

int run_count(const CountArgs& args) {
  const colperm::PatternSet T =
      colperm::parse_set_spec(args.set_spec, args.r);
  const colperm::EnumerationBudget budget{args.budget, 0.0};
  colperm::CountReport rep;
  if (args.engine == "naive") {
    rep = colperm::count_avoiders_naive(args.n, args.r, T, budget);
  } else if (args.engine == "parallel") {
    rep = colperm::count_avoiders_parallel(args.n, args.r, T, budget);
  } else {
    rep = colperm::count_avoiders(args.n, args.r, T, budget);
  }
  if (args.format == "json") {
    std::cout << colperm::count_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.count << "\n";
  }
  return kExitOk;
}

int run_list(const CountArgs& args) {
  const colperm::PatternSet T =
      colperm::parse_set_spec(args.set_spec, args.r);
  const colperm::EnumerationBudget budget{args.budget, 0.0};
  for (const colperm::ColouredPermutation& psi :
       colperm::list_avoiders(args.n, args.r, T, budget)) {
    std::cout << colperm::format_perm(psi) << "\n";
  }
  return kExitOk;
}

colperm::BigCount evaluate_formula(const FormulaArgs& args, int n) {
  const colperm::FamilyParams p{args.k, args.r, args.d, args.m};
  if (args.name == "thm1") return colperm::thm1_count(n, p);
  if (args.name == "thm2") return colperm::thm2_count(n, p);
  if (args.name == "thm3") return colperm::thm3_count(n, p);
  if (args.name == "union") return colperm::cor_union_count(n, args.a, args.b, p);
  if (args.name == "full-union") return colperm::cor_full_union_count(n, p);
  throw std::invalid_argument("unknown formula '" + args.name + "'");
}

int run_formula(const FormulaArgs& args) {
  std::cout << evaluate_formula(args, args.n) << "\n";
  return kExitOk;
}

int run_sequence(const SequenceArgs& args) {
  if (args.from > args.to || args.from < 0) {
    throw std::invalid_argument("invalid range: from=" +
                                std::to_string(args.from) +
                                " to=" + std::to_string(args.to));
  }
  for (int n = args.from; n <= args.to; ++n) {
    if (n > args.from) std::cout << ",";
    std::cout << evaluate_formula(args.formula, n);
  }
  std::cout << "\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  const colperm::Theorem t = colperm::theorem_from_name(args.name);
  const colperm::EnumerationBudget budget{args.budget, 0.0};
  const colperm::VerificationReport rep =
      colperm::verify_theorem(t, args.bounds, budget);
  if (!args.quiet) {
    for (const colperm::VerifyCell& c : rep.cells) {
      const char* flag =
          c.skipped ? "[skipped] " : (c.match ? "[ok]      " : "[MISMATCH]");
      std::cout << flag << " " << c.theorem << " k=" << c.k << " r=" << c.r
                << " d=" << c.d << " I=" << c.colours;
      if (c.m) std::cout << " m=" << *c.m;
      if (c.a) std::cout << " a=" << *c.a;
      if (c.b) std::cout << " b=" << *c.b;
      std::cout << " n=" << c.n;
      if (c.phi) std::cout << " phi=" << *c.phi;
      if (!c.skipped) {
        std::cout << " formula=" << c.formula << " oracle=" << c.oracle
                  << " states=" << c.states;
      }
      std::cout << "\n";
    }
  }
  const colperm::VerifySummary s = rep.summary();
  std::cout << "verify " << rep.theorem << " (" << rep.bounds
            << "): cells=" << s.cells << " mismatches=" << s.mismatches
            << " skipped=" << s.skipped << "\n";
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path);
    if (!out) {
      throw std::invalid_argument("cannot write report to '" +
                                  args.json_path + "'");
    }
    out << colperm::verification_report_json(rep).dump(2) << "\n";
  }
  if (s.mismatches > 0) return kExitMismatch;
  if (s.skipped > 0) return kExitBudget;
  return kExitOk;
}

int run_check(const std::string& what) {
  if (what != "bijections") {
    throw std::invalid_argument("unknown check '" + what +
                                "' (expected 'bijections')");
  }
  bool all_pass = true;
  for (const colperm::CheckResult& c : colperm::bijection_checks()) {
    std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << " - "
              << c.detail << "\n";
    all_pass = all_pass && c.pass;
  }
  return all_pass ? kExitOk : kExitMismatch;
}

void add_optional_bound(CLI::App* cmd, const std::string& flag,
                        std::optional<int>& slot, const std::string& help) {
  cmd->add_option_function<int>(
      flag, [&slot](const int& v) { slot = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "colperm - exact enumeration, closed-form counting and verification "
      "for pattern-avoiding coloured permutations"};
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "count the avoiders of a pattern set by exhaustive search");
  count->add_option("--n", count_args.n, "host permutation length")
      ->required();
  count->add_option("--r", count_args.r, "number of colours")->required();
  count->add_option("--set", count_args.set_spec,
                    "pattern set: T:k=..,r=..,m=..,I=c1|c2, "
                    "U:k=..,r=..,a=..,b=..,I=.., or @file.pat")
      ->required();
  count->add_option("--engine", count_args.engine,
                    "pruned (default), naive, or parallel")
      ->check(CLI::IsMember({"pruned", "naive", "parallel"}));
  count->add_option("--format", count_args.format, "plain (default) or json")
      ->check(CLI::IsMember({"plain", "json"}));
  count->add_option("--budget", count_args.budget,
                    "cap on visited search states");

  CountArgs list_args;
  CLI::App* list = app.add_subcommand(
      "list", "list the avoiders of a pattern set, one per line");
  list->add_option("--n", list_args.n, "host permutation length")->required();
  list->add_option("--r", list_args.r, "number of colours")->required();
  list->add_option("--set", list_args.set_spec, "pattern set spec")
      ->required();
  list->add_option("--budget", list_args.budget,
                   "cap on visited search states");

  FormulaArgs formula_args;
  CLI::App* formula = app.add_subcommand(
      "formula", "evaluate one closed-form count exactly");
  formula
      ->add_option("name", formula_args.name,
                   "thm1, thm2, thm3, union, or full-union")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "union", "full-union"}));
  formula->add_option("--n", formula_args.n, "host length")->required();
  formula->add_option("--k", formula_args.k, "pattern length")->required();
  formula->add_option("--r", formula_args.r, "number of colours")->required();
  formula->add_option("--d", formula_args.d, "size of the colour set I");
  formula->add_option("--m", formula_args.m, "first symbol (thm3)");
  formula->add_option("--a", formula_args.a, "union lower bound");
  formula->add_option("--b", formula_args.b, "union upper bound");

  SequenceArgs seq_args;
  CLI::App* sequence = app.add_subcommand(
      "sequence", "print a formula's terms for a range of n");
  sequence
      ->add_option("name", seq_args.formula.name,
                   "thm1, thm2, thm3, union, or full-union")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "union", "full-union"}));
  sequence->add_option("--k", seq_args.formula.k, "pattern length")
      ->required();
  sequence->add_option("--r", seq_args.formula.r, "number of colours")
      ->required();
  sequence->add_option("--d", seq_args.formula.d, "size of the colour set I");
  sequence->add_option("--m", seq_args.formula.m, "first symbol (thm3)");
  sequence->add_option("--a", seq_args.formula.a, "union lower bound");
  sequence->add_option("--b", seq_args.formula.b, "union upper bound");
  sequence->add_option("--from", seq_args.from, "first n")->required();
  sequence->add_option("--to", seq_args.to, "last n")->required();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "compare closed forms against the enumeration oracle on a grid");
  verify
      ->add_option("theorem", verify_args.name,
                   "thm1, cor-union, cor-full, thm2, thm3, or all")
      ->required()
      ->check(CLI::IsMember(
          {"thm1", "cor-union", "cor-full", "thm2", "thm3", "all"}));
  add_optional_bound(verify, "--k", verify_args.bounds.k, "fix k");
  add_optional_bound(verify, "--r", verify_args.bounds.r, "fix r");
  add_optional_bound(verify, "--d", verify_args.bounds.d, "fix d");
  add_optional_bound(verify, "--n", verify_args.bounds.n, "fix n");
  add_optional_bound(verify, "--m", verify_args.bounds.m, "fix m");
  add_optional_bound(verify, "--a", verify_args.bounds.a, "fix a");
  add_optional_bound(verify, "--b", verify_args.bounds.b, "fix b");
  add_optional_bound(verify, "--max-k", verify_args.bounds.max_k, "cap k");
  add_optional_bound(verify, "--max-r", verify_args.bounds.max_r, "cap r");
  add_optional_bound(verify, "--max-n", verify_args.bounds.max_n, "cap n");
  verify->add_option("--budget", verify_args.budget,
                     "per-cell cap on visited search states");
  verify->add_option("--json", verify_args.json_path,
                     "write the full report to this file as JSON");
  verify->add_flag("--quiet", verify_args.quiet,
                   "print only the summary line");

  std::string check_what;
  CLI::App* check = app.add_subcommand(
      "check", "run the bijection battery (round trips, complement, "
               "admissible insertions)");
  check->add_option("what", check_what, "bijections")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (list->parsed()) return run_list(list_args);
    if (formula->parsed()) return run_formula(formula_args);
    if (sequence->parsed()) return run_sequence(seq_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (check->parsed()) return run_check(check_what);
  } catch (const colperm::BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const colperm::ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
