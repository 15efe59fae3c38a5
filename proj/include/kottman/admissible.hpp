#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "kottman/cube_set.hpp"

namespace kottman {

/// Number of admissible subsets of C_dim: 2^(((3^dim - 1)/2) - dim + [zero bit]).
/// std::nullopt when the count does not fit in 63 bits.
std::optional<std::uint64_t> admissible_count(int dim, bool include_zero_choice);

/// Number of i-closed subsets of V_dim containing every e_k:
/// 2^(((5^dim - 1)/4) - dim + [zero bit]).
std::optional<std::uint64_t> gaussian_admissible_count(int dim, bool include_zero_choice);

/// Every A in C_dim with e_k in A and A = -A, addressed by index.
///
/// Index bit j (j < free_orbits().size()) includes the antipodal pair of the
/// j-th free orbit representative (canonical order); the next bit, when the
/// zero choice is enabled, includes 0. Indices enumerate the bitmaps in
/// increasing order, so index 0 is {+-e_k}.
class AdmissibleEnumerator {
 public:
  /// Throws BudgetExceeded when the set count exceeds `budget`.
  AdmissibleEnumerator(int dim, bool include_zero_choice, std::uint64_t budget);

  int dim() const noexcept { return dim_; }
  std::uint64_t count() const noexcept { return count_; }
  std::span<const TernaryVector> free_orbits() const noexcept { return free_; }
  SymmetricCubeSet at(std::uint64_t index) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < count_; ++i) f(i, at(i));
  }

 private:
  int dim_;
  bool zero_choice_;
  std::vector<TernaryVector> free_;
  std::uint64_t count_ = 0;
};

/// Same scheme over V_dim with orbits {x, ix, -x, -ix}.
class GaussianAdmissibleEnumerator {
 public:
  GaussianAdmissibleEnumerator(int dim, bool include_zero_choice, std::uint64_t budget);

  int dim() const noexcept { return dim_; }
  std::uint64_t count() const noexcept { return count_; }
  std::span<const GaussianVector> free_orbits() const noexcept { return free_; }
  GaussianSet at(std::uint64_t index) const;

 private:
  int dim_;
  bool zero_choice_;
  std::vector<GaussianVector> free_;
  std::uint64_t count_ = 0;
};

/// Deterministic stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t dim, std::uint64_t trial);

/// Random admissible sets: each non-basis antipodal orbit is included with
/// probability 1/2, and 0 with probability 1/2.
class AdmissibleSampler {
 public:
  explicit AdmissibleSampler(int dim);
  int dim() const noexcept { return dim_; }
  SymmetricCubeSet sample(std::mt19937_64& rng) const;

 private:
  int dim_;
  std::vector<TernaryVector> free_;
  // Small dimensions: the whole cube in canonical order with the orbit of each
  // point (-1 basis, -2 zero), so a sample needs no sorting.
  std::vector<TernaryVector> cube_;
  std::vector<std::int32_t> orbit_;
};

/// Random i-closed sets containing every e_k, same inclusion law over orbits {x, ix, -x, -ix}.
class GaussianSampler {
 public:
  explicit GaussianSampler(int dim);
  int dim() const noexcept { return dim_; }
  GaussianSet sample(std::mt19937_64& rng) const;

 private:
  int dim_;
  std::vector<GaussianVector> free_;
};

/// Non-basis antipodal orbit representatives (first nonzero coordinate +1), canonical order.
std::vector<TernaryVector> free_orbit_representatives(int dim);
/// Non-basis {x, ix, -x, -ix} orbit representatives (first nonzero coordinate +1), canonical order.
std::vector<GaussianVector> gaussian_free_orbit_representatives(int dim);

}  // namespace kottman
