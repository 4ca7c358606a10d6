#include "colperm/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colperm {

namespace {

// Cooperative cancellation inside a parallel region; never escapes this
// translation unit.
struct AbortSearch {};

struct FlatPattern {
  int k = 0;
  std::vector<int> sym;
  std::vector<int> col;
};

FlatPattern flatten(const ColouredPermutation& p) {
  FlatPattern f;
  f.k = p.size();
  f.sym.reserve(static_cast<std::size_t>(f.k));
  f.col.reserve(static_cast<std::size_t>(f.k));
  for (const Element& e : p.elements()) {
    f.sym.push_back(e.symbol);
    f.col.push_back(e.colour);
  }
  return f;
}

// Serial gates compare the local total against the cap directly. Parallel
// worker gates publish progress to a shared accumulator in chunks and bail
// out once any worker pushed the shared total over the cap; the eventual
// success/error outcome depends only on the schedule-independent total.
class BudgetGate {
 public:
  explicit BudgetGate(std::int64_t max_states) : max_(max_states) {}
  BudgetGate(std::int64_t max_states, std::atomic<std::int64_t>* shared,
             std::atomic<bool>* abort)
      : max_(max_states), shared_(shared), abort_(abort) {}

  void on_state(std::uint64_t local_total) {
    if (shared_ == nullptr) {
      if (static_cast<std::int64_t>(local_total) > max_) {
        throw BudgetExceeded("enumeration budget exceeded (max_states=" +
                             std::to_string(max_) + ")");
      }
      return;
    }
    if (++pending_ >= kChunk) flush();
    if (abort_->load(std::memory_order_relaxed)) throw AbortSearch{};
  }

  void flush() {
    if (shared_ == nullptr || pending_ == 0) return;
    std::int64_t total =
        shared_->fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (total > max_) abort_->store(true, std::memory_order_relaxed);
  }

 private:
  static constexpr std::int64_t kChunk = 1024;
  std::int64_t max_;
  std::atomic<std::int64_t>* shared_ = nullptr;
  std::atomic<bool>* abort_ = nullptr;
  std::int64_t pending_ = 0;
};

// Embedding search on a partial word with the pattern's last slot pinned at
// position `last` (0-based). Slots are filled left to right; a partial
// embedding dies on the first colour or pairwise-order failure.
bool exists_ending(const FlatPattern& p, const int* ws, const int* wc,
                   int* chosen, int slot, int from, int last) {
  const int k = p.k;
  if (slot == k - 1) return true;  // all free slots placed, pinned slot ok
  for (int pos = from; pos <= last - (k - 1 - slot); ++pos) {
    if (wc[pos] != p.col[static_cast<std::size_t>(slot)]) continue;
    bool ok = (ws[pos] < ws[last]) ==
              (p.sym[static_cast<std::size_t>(slot)] <
               p.sym[static_cast<std::size_t>(k) - 1]);
    for (int j = 0; ok && j < slot; ++j) {
      ok = (ws[pos] < ws[chosen[j]]) ==
           (p.sym[static_cast<std::size_t>(slot)] <
            p.sym[static_cast<std::size_t>(j)]);
    }
    if (!ok) continue;
    chosen[slot] = pos;
    if (exists_ending(p, ws, wc, chosen, slot + 1, pos + 1, last)) return true;
  }
  return false;
}

long long count_ending(const FlatPattern& p, const int* ws, const int* wc,
                       int* chosen, int slot, int from, int last) {
  const int k = p.k;
  if (slot == k - 1) return 1;
  long long total = 0;
  for (int pos = from; pos <= last - (k - 1 - slot); ++pos) {
    if (wc[pos] != p.col[static_cast<std::size_t>(slot)]) continue;
    bool ok = (ws[pos] < ws[last]) ==
              (p.sym[static_cast<std::size_t>(slot)] <
               p.sym[static_cast<std::size_t>(k) - 1]);
    for (int j = 0; ok && j < slot; ++j) {
      ok = (ws[pos] < ws[chosen[j]]) ==
           (p.sym[static_cast<std::size_t>(slot)] <
            p.sym[static_cast<std::size_t>(j)]);
    }
    if (!ok) continue;
    chosen[slot] = pos;
    total += count_ending(p, ws, wc, chosen, slot + 1, pos + 1, last);
  }
  return total;
}

bool has_embedding_ending_at(const FlatPattern& p, const int* ws,
                             const int* wc, int last, int* chosen) {
  if (p.k == 0 || last + 1 < p.k) return false;
  if (wc[last] != p.col[static_cast<std::size_t>(p.k) - 1]) return false;
  if (p.k == 1) return true;
  return exists_ending(p, ws, wc, chosen, 0, 0, last);
}

long long count_embeddings_ending_at(const FlatPattern& p, const int* ws,
                                     const int* wc, int last, int* chosen) {
  if (p.k == 0 || last + 1 < p.k) return 0;
  if (wc[last] != p.col[static_cast<std::size_t>(p.k) - 1]) return 0;
  if (p.k == 1) return 1;
  return count_ending(p, ws, wc, chosen, 0, 0, last);
}

// Left-to-right backtracker over partial words. After placing position p it
// only tests occurrences whose last index is p, which keeps the pruning
// sound without rechecking old subsequences. With a `once` pattern set it
// counts exactly-once containers instead of avoiders.
class Searcher {
 public:
  Searcher(int n, int r, const std::vector<FlatPattern>* block,
           const FlatPattern* once, BudgetGate gate)
      : n_(n),
        r_(r),
        block_(block),
        once_(once),
        gate_(gate),
        wsym_(static_cast<std::size_t>(n)),
        wcol_(static_cast<std::size_t>(n)),
        used_(static_cast<std::size_t>(n) + 1, false) {
    int max_k = once_ != nullptr ? once_->k : 0;
    for (const FlatPattern& p : *block_) max_k = std::max(max_k, p.k);
    chosen_.assign(static_cast<std::size_t>(max_k) + 1, 0);
  }

  std::function<void(const std::vector<int>&, const std::vector<int>&)>
      on_accept;  // full word (symbols, colours); only accepting leaves

  void count_root() { bump(); }

  void run_all() { descend(0, 0); }

  // Explores only the subtree rooted at first element s^(c).
  void run_branch(int s, int c) { expand(0, s, c, 0); }

  void finish() { gate_.flush(); }

  const BigCount& count() const { return count_; }
  std::uint64_t states() const { return states_; }

 private:
  void bump() {
    ++states_;
    gate_.on_state(states_);
  }

  void descend(int pos, long long occ) {
    if (pos == n_) {
      if (once_ == nullptr || occ == 1) {
        ++count_;
        if (on_accept) on_accept(wsym_, wcol_);
      }
      return;
    }
    for (int s = 1; s <= n_; ++s) {
      if (used_[static_cast<std::size_t>(s)]) continue;
      for (int c = 1; c <= r_; ++c) expand(pos, s, c, occ);
    }
  }

  void expand(int pos, int s, int c, long long occ) {
    wsym_[static_cast<std::size_t>(pos)] = s;
    wcol_[static_cast<std::size_t>(pos)] = c;
    used_[static_cast<std::size_t>(s)] = true;
    bump();
    if (!blocked_at(pos)) {
      if (once_ != nullptr) {
        occ += count_embeddings_ending_at(*once_, wsym_.data(), wcol_.data(),
                                          pos, chosen_.data());
        if (occ <= 1) descend(pos + 1, occ);
      } else {
        descend(pos + 1, 0);
      }
    }
    used_[static_cast<std::size_t>(s)] = false;
  }

  bool blocked_at(int last) {
    for (const FlatPattern& p : *block_) {
      if (has_embedding_ending_at(p, wsym_.data(), wcol_.data(), last,
                                  chosen_.data())) {
        return true;
      }
    }
    return false;
  }

  int n_;
  int r_;
  const std::vector<FlatPattern>* block_;
  const FlatPattern* once_;
  BudgetGate gate_;
  std::vector<int> wsym_;
  std::vector<int> wcol_;
  std::vector<bool> used_;
  std::vector<int> chosen_;
  BigCount count_ = 0;
  std::uint64_t states_ = 0;
};

void validate_query(int n, int r, const PatternSet& T,
                    const EnumerationBudget& budget) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (T.rank() != r) {
    throw std::invalid_argument("pattern set rank " +
                                std::to_string(T.rank()) +
                                " differs from query rank " +
                                std::to_string(r));
  }
  if (budget.max_states < 1) {
    throw std::invalid_argument("budget max_states must be >= 1");
  }
}

bool contains_empty_pattern(const PatternSet& T) {
  for (const ColouredPermutation& p : T.patterns()) {
    if (p.size() == 0) return true;
  }
  return false;
}

std::vector<FlatPattern> flatten_set(const PatternSet& T,
                                     const ColouredPermutation* skip) {
  std::vector<FlatPattern> out;
  out.reserve(static_cast<std::size_t>(T.size()));
  for (const ColouredPermutation& p : T.patterns()) {
    if (skip != nullptr && p == *skip) continue;
    out.push_back(flatten(p));
  }
  return out;
}

std::string once_tag(const PatternSet& T, const ColouredPermutation& phi) {
  return T.tag() + ";exactly-once(" + format_perm(phi) + ")";
}

void check_phi_member(const PatternSet& T, const ColouredPermutation& phi) {
  if (!T.contains_pattern(phi)) {
    throw std::invalid_argument("pattern " + format_perm(phi) +
                                " is not a member of " + T.tag());
  }
}

// Shared driver for the serial pruned counters.
CountReport run_serial(int n, int r, const std::vector<FlatPattern>& block,
                       const FlatPattern* once, std::string tag,
                       const EnumerationBudget& budget,
                       std::vector<ColouredPermutation>* sink) {
  CountReport rep;
  rep.n = n;
  rep.r = r;
  rep.tag = std::move(tag);
  Searcher s(n, r, &block, once, BudgetGate(budget.max_states));
  if (sink != nullptr) {
    s.on_accept = [&](const std::vector<int>& ws, const std::vector<int>& wc) {
      std::vector<Element> elems;
      elems.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        elems.push_back({ws[static_cast<std::size_t>(i)],
                         wc[static_cast<std::size_t>(i)]});
      }
      sink->emplace_back(std::move(elems), r);
    };
  }
  s.count_root();
  s.run_all();
  rep.count = s.count();
  rep.states_visited = s.states();
  return rep;
}

// Shared driver for the parallel counters: one branch per first element,
// explored with private state; the per-branch results are combined in
// canonical branch order afterwards.
CountReport run_parallel(int n, int r, const std::vector<FlatPattern>& block,
                         const FlatPattern* once, std::string tag,
                         const EnumerationBudget& budget) {
  CountReport rep;
  rep.n = n;
  rep.r = r;
  rep.tag = std::move(tag);
  if (n == 0) {
    // root is the only node; no branches to spread
    Searcher s(n, r, &block, once, BudgetGate(budget.max_states));
    s.count_root();
    s.run_all();
    rep.count = s.count();
    rep.states_visited = s.states();
    return rep;
  }

  const int branches = n * r;
  std::vector<BigCount> branch_count(static_cast<std::size_t>(branches));
  std::vector<std::uint64_t> branch_states(
      static_cast<std::size_t>(branches), 0);
  std::atomic<std::int64_t> shared_states{1};  // the root
  std::atomic<bool> abort{false};
  std::atomic<bool> internal_error{false};

#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < branches; ++b) {
    if (abort.load(std::memory_order_relaxed)) continue;
    const int s = b / r + 1;
    const int c = b % r + 1;
    try {
      Searcher srch(n, r, &block, once,
                    BudgetGate(budget.max_states, &shared_states, &abort));
      srch.run_branch(s, c);
      srch.finish();
      branch_count[static_cast<std::size_t>(b)] = srch.count();
      branch_states[static_cast<std::size_t>(b)] = srch.states();
    } catch (const AbortSearch&) {
      // budget blown; flag already set
    } catch (...) {
      internal_error.store(true, std::memory_order_relaxed);
      abort.store(true, std::memory_order_relaxed);
    }
  }

  if (internal_error.load()) {
    throw std::runtime_error("internal error during parallel enumeration");
  }
  if (abort.load()) {
    throw BudgetExceeded("enumeration budget exceeded (max_states=" +
                         std::to_string(budget.max_states) + ")");
  }
  BigCount count = 0;
  std::uint64_t states = 1;
  for (int b = 0; b < branches; ++b) {
    count += branch_count[static_cast<std::size_t>(b)];
    states += branch_states[static_cast<std::size_t>(b)];
  }
  rep.count = std::move(count);
  rep.states_visited = states;
  return rep;
}

}  // namespace

std::vector<ColouredPermutation> enumerate_all(int n, int r,
                                               const EnumerationBudget& budget) {
  if (budget.max_states < 1) {
    throw std::invalid_argument("budget max_states must be >= 1");
  }
  std::vector<ColouredPermutation> out;
  std::int64_t states = 0;
  for_each_permutation(n, r, [&](const ColouredPermutation& p) {
    if (++states > budget.max_states) {
      throw BudgetExceeded("enumeration budget exceeded (max_states=" +
                           std::to_string(budget.max_states) + ")");
    }
    out.push_back(p);
  });
  return out;
}

CountReport count_avoiders(int n, int r, const PatternSet& T,
                           const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  if (contains_empty_pattern(T)) {
    return CountReport{n, r, T.tag(), 0, 1};
  }
  auto block = flatten_set(T, nullptr);
  return run_serial(n, r, block, nullptr, T.tag(), budget, nullptr);
}

CountReport count_avoiders_naive(int n, int r, const PatternSet& T,
                                 const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  CountReport rep;
  rep.n = n;
  rep.r = r;
  rep.tag = T.tag();
  std::int64_t states = 0;
  BigCount count = 0;
  for_each_permutation(n, r, [&](const ColouredPermutation& psi) {
    if (++states > budget.max_states) {
      throw BudgetExceeded("enumeration budget exceeded (max_states=" +
                           std::to_string(budget.max_states) + ")");
    }
    for (const ColouredPermutation& pat : T.patterns()) {
      if (contains(psi, pat)) return;
    }
    ++count;
  });
  rep.count = std::move(count);
  rep.states_visited = states;
  return rep;
}

CountReport count_avoiders_parallel(int n, int r, const PatternSet& T,
                                    const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  if (contains_empty_pattern(T)) {
    return CountReport{n, r, T.tag(), 0, 1};
  }
  auto block = flatten_set(T, nullptr);
  return run_parallel(n, r, block, nullptr, T.tag(), budget);
}

CountReport count_exactly_once(int n, int r, const PatternSet& T,
                               const ColouredPermutation& phi,
                               const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  check_phi_member(T, phi);
  auto block = flatten_set(T, &phi);
  if (phi.size() == 0) {
    // the empty pattern occurs exactly once in everything
    return run_serial(n, r, block, nullptr, once_tag(T, phi), budget, nullptr);
  }
  FlatPattern once = flatten(phi);
  return run_serial(n, r, block, &once, once_tag(T, phi), budget, nullptr);
}

CountReport count_exactly_once_naive(int n, int r, const PatternSet& T,
                                     const ColouredPermutation& phi,
                                     const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  check_phi_member(T, phi);
  CountReport rep;
  rep.n = n;
  rep.r = r;
  rep.tag = once_tag(T, phi);
  std::int64_t states = 0;
  BigCount count = 0;
  for_each_permutation(n, r, [&](const ColouredPermutation& psi) {
    if (++states > budget.max_states) {
      throw BudgetExceeded("enumeration budget exceeded (max_states=" +
                           std::to_string(budget.max_states) + ")");
    }
    for (const ColouredPermutation& pat : T.patterns()) {
      if (pat == phi) continue;
      if (contains(psi, pat)) return;
    }
    if (count_occurrences(psi, phi) == 1) ++count;
  });
  rep.count = std::move(count);
  rep.states_visited = states;
  return rep;
}

CountReport count_exactly_once_parallel(int n, int r, const PatternSet& T,
                                        const ColouredPermutation& phi,
                                        const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  check_phi_member(T, phi);
  auto block = flatten_set(T, &phi);
  if (phi.size() == 0) {
    return run_parallel(n, r, block, nullptr, once_tag(T, phi), budget);
  }
  FlatPattern once = flatten(phi);
  return run_parallel(n, r, block, &once, once_tag(T, phi), budget);
}

std::vector<ColouredPermutation> list_avoiders(int n, int r,
                                               const PatternSet& T,
                                               const EnumerationBudget& budget) {
  validate_query(n, r, T, budget);
  std::vector<ColouredPermutation> out;
  if (contains_empty_pattern(T)) return out;
  auto block = flatten_set(T, nullptr);
  run_serial(n, r, block, nullptr, T.tag(), budget, &out);
  return out;
}

}  // namespace colperm
