#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/cube_set.hpp"

namespace kottman {

struct GaussianFreeCertificate {
  GaussianSet ground_set;
  std::vector<GaussianVector> witness;  // canonical order
  std::size_t claimed_size = 0;
  bool checked = false;
  /// Size obtained through the real route on f(A) before augmentation.
  std::size_t embedded_size = 0;
  /// "single_addition" or "exact_search".
  std::string augmentation;
};

/// True iff no Gaussian difference of two distinct elements of B lies in A.
bool is_gaussian_free(std::span<const GaussianVector> b, const GaussianSet& a);

/// Exact maximum difference-free subset of a Gaussian set (lexicographically least).
std::vector<GaussianVector> max_gaussian_free_subset(const GaussianSet& a, std::size_t vertex_budget);

/// A u iA for an admissible A without 0.
GaussianSet delta_construction(const SymmetricCubeSet& a);

/// Difference-free subset of size 2n + 2 of an i-closed A in V_n containing every e_k.
/// The real engine on f(A) gives 2n + 1 points; one more is found by a single
/// addition or, failing that, by exact search over A. Throws ResearchArtifact
/// if no such subset exists.
GaussianFreeCertificate find_gaussian_difference_free(const GaussianSet& a, const Budgets& budgets = {});

}  // namespace kottman
