#pragma once

#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <string>

#include "kottman/config.hpp"

namespace kottman {

/// Every data-parallel loop has a serial reference path with identical results.
enum class Execution { serial, parallel };

/// Runs f(i) for i in [0, n). The first exception thrown by any iteration is
/// rethrown after the loop; results must not depend on scheduling.
template <class F>
void for_each_index(Execution ex, std::int64_t n, F&& f) {
  if (ex == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_lock;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_lock);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Smallest i in [0, n) with pred(i), or n. The parallel path evaluates every
/// index, which keeps the examined count identical to the serial scan.
template <class Pred>
std::int64_t first_index_where(Execution ex, std::int64_t n, Pred&& pred) {
  std::int64_t first = n;
  if (ex == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i)
      if (pred(i) && i < first) first = i;
    return first;
  }
  std::mutex lock;
  for_each_index(ex, n, [&](std::int64_t i) {
    if (pred(i)) {
      std::lock_guard<std::mutex> g(lock);
      if (i < first) first = i;
    }
  });
  return first;
}

/// Randomized property sweeps. Each trial draws its own admissible set from
/// trial_rng(seed, dim, trial), runs a finder and re-verifies the output.
enum class SweepKind { difference_free, sum_free, chain, gaussian };

const char* to_string(SweepKind kind) noexcept;

struct SweepReport {
  SweepKind kind = SweepKind::difference_free;
  int dim = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  /// Smallest failing trial index and what went wrong (empty when none failed).
  std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
  std::string first_failure_detail;
  bool passed() const noexcept { return trials > 0 && failures == 0; }
};

SweepReport random_sweep(SweepKind kind, int dim, std::uint64_t trials, std::uint64_t seed, const Budgets& budgets,
                         Execution ex);

/// Same checks over every admissible set of the cube (with the zero choice).
SweepReport exhaustive_sweep(SweepKind kind, int dim, const Budgets& budgets, Execution ex);

}  // namespace kottman
