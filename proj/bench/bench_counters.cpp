// Times the serial reference filter, the pruned backtracker and the
// OpenMP-partitioned backtracker on growing instances of two pattern
// families. The three engines must report identical counts; the run aborts
// if they ever disagree.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "colperm/enumerate.hpp"
#include "colperm/pattern_set.hpp"

using namespace colperm;

namespace {

struct Timing {
  BigCount count;
  BigCount states;
  double ms = 0.0;
};

template <class Fn>
Timing timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const CountReport rep = fn();
  const auto stop = std::chrono::steady_clock::now();
  return {rep.count, rep.states_visited,
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

void print_row(int n, const std::string& engine, const Timing& t,
               double base_ms) {
  std::cout << std::setw(4) << n << "  " << std::setw(8) << engine << "  "
            << std::setw(14) << t.count.str() << "  " << std::setw(12)
            << t.states.str() << "  " << std::setw(10) << std::fixed
            << std::setprecision(2) << t.ms;
  if (base_ms > 0.0 && t.ms > 0.0) {
    std::cout << "  " << std::setw(7) << std::setprecision(1)
              << base_ms / t.ms << "x";
  }
  std::cout << "\n";
}

void bench_family(const PatternSet& T, int r, int max_n, int naive_max_n) {
  std::cout << "\npattern family " << T.tag() << "\n";
  std::cout << std::setw(4) << "n" << "  " << std::setw(8) << "engine"
            << "  " << std::setw(14) << "count" << "  " << std::setw(12)
            << "states" << "  " << std::setw(10) << "ms" << "  "
            << std::setw(8) << "vs base\n";
  for (int n = 4; n <= max_n; ++n) {
    double base_ms = 0.0;
    BigCount reference;
    bool have_reference = false;
    if (n <= naive_max_n) {
      const Timing t =
          timed([&] { return count_avoiders_naive(n, r, T); });
      print_row(n, "naive", t, 0.0);
      base_ms = t.ms;
      reference = t.count;
      have_reference = true;
    }
    const Timing pruned = timed([&] { return count_avoiders(n, r, T); });
    print_row(n, "pruned", pruned, base_ms);
    const Timing parallel =
        timed([&] { return count_avoiders_parallel(n, r, T); });
    print_row(n, "parallel", parallel, base_ms);
    if ((have_reference && reference != pruned.count) ||
        pruned.count != parallel.count) {
      std::cerr << "engine disagreement at n=" << n << " for " << T.tag()
                << "\n";
      std::exit(1);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  int max_n_r2 = 8;
  int naive_max_n = 7;
  if (argc > 1) max_n_r2 = std::stoi(argv[1]);
  if (argc > 2) naive_max_n = std::stoi(argv[2]);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel engine runs serially\n";
#endif

  bench_family(build_T(3, 2, 1, ColourSet::first(1, 2)), 2, max_n_r2,
               naive_max_n);
  bench_family(build_T(3, 1, 1, ColourSet::first(1, 1)), 1, max_n_r2 + 3,
               std::min(naive_max_n + 2, 9));
  return 0;
}
