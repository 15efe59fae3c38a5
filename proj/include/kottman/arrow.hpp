#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/cube_set.hpp"
#include "kottman/kernels.hpp"

namespace kottman {

enum class ArrowRelation { real_difference, real_sum, complex_difference };
enum class ArrowMethod { exhaustive, witness, theorem_backed };

const char* to_string(ArrowRelation r) noexcept;
const char* to_string(ArrowMethod m) noexcept;
ArrowRelation parse_relation(const std::string& s);
ArrowMethod parse_method(const std::string& s);

/// Claim "N -> l" for one of the three relations: every admissible A in the
/// N-dimensional cube has a free subset of size l. A set with fewer than l
/// elements has no such subset and so counts as a counterexample.
struct ArrowCertificate {
  ArrowRelation relation = ArrowRelation::real_difference;
  int N = 0;
  int l = 0;
  bool holds = false;
  ArrowMethod method = ArrowMethod::exhaustive;

  // exhaustive
  std::uint64_t sets_examined = 0;
  std::uint64_t predicted_count = 0;

  // counterexample: from the exhaustive scan (smallest index) or an explicit witness
  std::optional<SymmetricCubeSet> counterexample;
  std::optional<GaussianSet> gaussian_counterexample;
  std::optional<std::uint64_t> counterexample_index;
  std::size_t counterexample_max_free = 0;
  /// N = 0: the only admissible set of the 0-dimensional cube is empty.
  bool trivial = false;

  // theorem_backed
  std::string claim;
  std::vector<SweepReport> evidence;
};

ArrowCertificate arrow_holds(ArrowRelation relation, int N, int l, ArrowMethod method, const Budgets& budgets = {},
                             Execution ex = Execution::parallel);

/// Closed forms: K(l) = l - 1, S(l) = l, K_C(2n + v) = n (v = 1, 2).
int kottman_formula(int l);
int sumfree_formula(int l);
int gaussian_kottman_formula(int l);

struct ValueResult {
  int value = 0;
  ArrowCertificate lower;  // (value - 1) does not arrow l
  ArrowCertificate upper;  // value arrows l
};

/// The upper bound is exhaustive inside the exhaustive range (l <= 4 real
/// difference, l <= 3 sum, n <= 2 complex) unless `exhaustive_upper` is false,
/// and theorem-backed with random evidence otherwise.
ValueResult kottman_value(int l, const Budgets& budgets = {}, Execution ex = Execution::parallel, bool exhaustive_upper = true);
ValueResult sumfree_value(int l, const Budgets& budgets = {}, Execution ex = Execution::parallel, bool exhaustive_upper = true);
ValueResult gaussian_kottman_value(int l, const Budgets& budgets = {}, Execution ex = Execution::parallel,
                                   bool exhaustive_upper = true);

}  // namespace kottman
