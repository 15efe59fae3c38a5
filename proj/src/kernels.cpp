#include "kottman/kernels.hpp"

#include <algorithm>
#include <optional>

#include "kottman/admissible.hpp"
#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"
#include "kottman/gaussian.hpp"

namespace kottman {

const char* to_string(SweepKind kind) noexcept {
  switch (kind) {
    case SweepKind::difference_free: return "difference_free";
    case SweepKind::sum_free: return "sum_free";
    case SweepKind::chain: return "chain";
    case SweepKind::gaussian: return "gaussian";
  }
  return "?";
}

namespace {

std::optional<std::string> check_real(SweepKind kind, const SymmetricCubeSet& a, const Budgets& budgets) {
  const auto n = static_cast<std::size_t>(a.dim());
  switch (kind) {
    case SweepKind::difference_free: {
      const auto c = find_difference_free(a, budgets);
      if (c.witness.size() != n + 1) return "witness size " + std::to_string(c.witness.size());
      if (!is_free(c.witness, a, FreeMode::difference)) return std::string("witness is not difference-free");
      return std::nullopt;
    }
    case SweepKind::sum_free: {
      const auto c = find_sum_free(a, budgets);
      if (c.witness.size() != n) return "witness size " + std::to_string(c.witness.size());
      if (!is_free(c.witness, a, FreeMode::sum)) return std::string("witness is not sum-free");
      return std::nullopt;
    }
    case SweepKind::chain: {
      const auto chain = chain_difference_free(a, budgets.check_pruning);
      if (chain.size() != n) return "chain length " + std::to_string(chain.size());
      for (std::size_t k = 0; k < chain.size(); ++k) {
        const int level = static_cast<int>(k) + 1;
        if (chain[k].witness.size() != k + 2) return "stage " + std::to_string(level) + " has the wrong size";
        if (!is_free(chain[k].witness, project_set(a, level), FreeMode::difference))
          return "stage " + std::to_string(level) + " is not difference-free";
        if (k + 1 < chain.size())
          for (const auto& x : chain[k].witness)
            if (std::none_of(chain[k + 1].witness.begin(), chain[k + 1].witness.end(),
                             [&](const TernaryVector& y) { return project(y, level) == x; }))
              return "stage " + std::to_string(level) + " is not a projection of the next stage";
      }
      return std::nullopt;
    }
    case SweepKind::gaussian: break;
  }
  return std::string("not a real sweep");
}

std::optional<std::string> check_gaussian(const GaussianSet& a, const Budgets& budgets) {
  const auto c = find_gaussian_difference_free(a, budgets);
  const auto want = 2 * static_cast<std::size_t>(a.dim()) + 2;
  if (c.witness.size() != want) return "witness size " + std::to_string(c.witness.size());
  if (!is_gaussian_free(c.witness, a)) return std::string("witness is not difference-free");
  return std::nullopt;
}

template <class Check>
SweepReport run_sweep(SweepKind kind, int dim, std::uint64_t trials, std::uint64_t seed, Execution ex, Check&& check) {
  SweepReport r;
  r.kind = kind;
  r.dim = dim;
  r.seed = seed;
  r.trials = trials;
  std::mutex lock;
  for_each_index(ex, static_cast<std::int64_t>(trials), [&](std::int64_t t) {
    std::optional<std::string> failure;
    try {
      failure = check(static_cast<std::uint64_t>(t));
    } catch (const std::exception& e) {
      failure = std::string(e.what());
    }
    if (!failure) return;
    std::lock_guard<std::mutex> g(lock);
    ++r.failures;
    if (static_cast<std::uint64_t>(t) < r.first_failure) {
      r.first_failure = static_cast<std::uint64_t>(t);
      r.first_failure_detail = *failure;
    }
  });
  return r;
}

}  // namespace

SweepReport random_sweep(SweepKind kind, int dim, std::uint64_t trials, std::uint64_t seed, const Budgets& budgets,
                         Execution ex) {
  if (kind == SweepKind::gaussian) {
    const GaussianSampler sampler(dim);
    return run_sweep(kind, dim, trials, seed, ex, [&](std::uint64_t t) {
      auto rng = trial_rng(seed, static_cast<std::uint64_t>(dim), t);
      return check_gaussian(sampler.sample(rng), budgets);
    });
  }
  const AdmissibleSampler sampler(dim);
  return run_sweep(kind, dim, trials, seed, ex, [&](std::uint64_t t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(dim), t);
    return check_real(kind, sampler.sample(rng), budgets);
  });
}

SweepReport exhaustive_sweep(SweepKind kind, int dim, const Budgets& budgets, Execution ex) {
  if (kind == SweepKind::gaussian) {
    const GaussianAdmissibleEnumerator e(dim, true, budgets.enumeration);
    return run_sweep(kind, dim, e.count(), 0, ex, [&](std::uint64_t t) { return check_gaussian(e.at(t), budgets); });
  }
  const AdmissibleEnumerator e(dim, true, budgets.enumeration);
  return run_sweep(kind, dim, e.count(), 0, ex, [&](std::uint64_t t) { return check_real(kind, e.at(t), budgets); });
}

}  // namespace kottman
