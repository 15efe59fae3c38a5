#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/conflict_graph.hpp"
#include "kottman/cube_set.hpp"

namespace kottman {

/// A free subset of a ground set, re-verifiable from its fields alone.
struct FreeSetCertificate {
  FreeMode mode = FreeMode::difference;
  SymmetricCubeSet ground_set;
  std::vector<TernaryVector> witness;  // canonical order
  std::size_t claimed_size = 0;
  bool checked = false;
  /// Sum mode only: x + x is also outside A for every witness element.
  bool non_distinct_sum_free = false;
};

/// True iff no difference (resp. sum) of two distinct elements of B lies in A.
/// Throws PreconditionError when B is not a subset of A.
bool is_free(std::span<const TernaryVector> b, const SymmetricCubeSet& a, FreeMode mode);

struct MaxFreeResult {
  std::size_t size = 0;
  std::vector<TernaryVector> witness;  // lexicographically least maximum free subset
};

/// Exact maximum free subset. Throws BudgetExceeded when |A| > vertex_budget.
MaxFreeResult max_free_subset(const SymmetricCubeSet& a, FreeMode mode, std::size_t vertex_budget = Budgets{}.mis_vertices);

/// Difference-free subset of size dim + 1 of an admissible A.
FreeSetCertificate find_difference_free(const SymmetricCubeSet& a, const Budgets& budgets = {});

/// Sum-free subset of size dim of an admissible A.
FreeSetCertificate find_sum_free(const SymmetricCubeSet& a, const Budgets& budgets = {});

/// One extension step: from B difference-free in pr_N A to B' in A with
/// |B'| = |B| + 1 (an extension of every element of B plus one new point z).
/// Among all valid choices, the extension tuple is the lexicographically least
/// (elements of B in canonical order, digits + < 0 < -), then z the least.
FreeSetCertificate extend_difference_free(const SymmetricCubeSet& a, std::span<const TernaryVector> b,
                                          bool check_pruning = false);

/// B_1, ..., B_N with |B_n| = n + 1, B_n difference-free in pr_n A and B_n
/// the projection of B_{n+1} minus its new point.
std::vector<FreeSetCertificate> chain_difference_free(const SymmetricCubeSet& a, bool check_pruning = false);

/// {+-e_i} together with {e_i - e_j : i != j} in C_{l-2}; maximum difference-free size l - 1.
SymmetricCubeSet witness_difference(int l);

/// {+-e_i} together with {0} in C_{l-1}; maximum sum-free size l - 1.
SymmetricCubeSet witness_sum(int l);

/// Cell (k, m) of the n x n grid off the diagonal, 1-based.
struct GridPoint {
  int k = 0;
  int m = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Every pair of distinct points has disjoint supports, or each shared index
/// is the first coordinate of one point and the second of the other.
bool grid_star_check(std::span<const GridPoint> b, int n);

struct GridReport {
  int n = 0;
  std::size_t max_size = 0;
  std::vector<GridPoint> witness;      // first maximum set in lexicographic order
  std::uint64_t star_sets = 0;         // nonempty sets satisfying the condition
  std::uint64_t full_sets = 0;         // those of size n
  bool bound_holds = false;            // max_size <= n
  bool coverage_holds = false;         // size-n sets cover each index once as k and once as m
};

/// Exhaustive check over all subsets of off-diagonal cells. Throws BudgetExceeded for n > max_n.
GridReport grid_max_properties(int n, int max_n = Budgets{}.grid_max_n);

}  // namespace kottman
