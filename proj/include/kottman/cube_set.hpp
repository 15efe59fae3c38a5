#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kottman/ternary.hpp"

namespace kottman {

/// Finite subset A of the cube C_dim with exact membership.
///
/// Members are kept sorted in canonical order. The two flags record the
/// conditions "contains every e_k" and "closed under negation"; they are
/// recomputed from the members, never trusted from input.
class SymmetricCubeSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SymmetricCubeSet() = default;
  SymmetricCubeSet(int dim, std::vector<TernaryVector> members);
  /// Trusted construction from members already in canonical order without repeats.
  static SymmetricCubeSet from_canonical(int dim, std::vector<TernaryVector> sorted_unique);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const TernaryVector> members() const noexcept { return members_; }
  const TernaryVector& operator[](std::size_t i) const noexcept { return members_[i]; }

  bool contains(const TernaryVector& x) const noexcept;
  /// Position in canonical order, or npos.
  std::size_t index_of(const TernaryVector& x) const noexcept;

  bool contains_basis() const noexcept { return contains_basis_; }
  bool symmetric() const noexcept { return symmetric_; }
  /// Both conditions hold.
  bool admissible() const noexcept { return contains_basis_ && symmetric_; }
  bool contains_zero() const noexcept;

  friend bool operator==(const SymmetricCubeSet& a, const SymmetricCubeSet& b) noexcept {
    return a.dim_ == b.dim_ && a.members_ == b.members_;
  }

 private:
  void finish();

  int dim_ = 0;
  std::vector<TernaryVector> members_;
  std::vector<std::uint64_t> dense_;  // bitmap over base-3 codes, small dims only
  bool contains_basis_ = false;
  bool symmetric_ = true;
};

/// pr_n A.
SymmetricCubeSet project_set(const SymmetricCubeSet& a, int n);

/// All (x, xi) in A, in the order xi = +1, 0, -1. Empty when x is not in pr_{dim-1} A.
std::vector<TernaryVector> extensions_of(const TernaryVector& x, const SymmetricCubeSet& a);

/// S together with -S. `dim` fixes the ambient cube (needed for the empty set).
SymmetricCubeSet symmetric_closure(std::span<const TernaryVector> s, int dim);

/// Image of A under a coordinate permutation.
SymmetricCubeSet permute_set(const SymmetricCubeSet& a, std::span<const int> perm);

/// Subset of the Gaussian cube V_dim with exact membership.
class GaussianSet {
 public:
  GaussianSet() = default;
  GaussianSet(int dim, std::vector<GaussianVector> members);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const GaussianVector> members() const noexcept { return members_; }
  const GaussianVector& operator[](std::size_t i) const noexcept { return members_[i]; }

  bool contains(const GaussianVector& x) const noexcept { return embedded_.contains(embed_real(x)); }
  bool contains_basis() const noexcept { return contains_basis_; }
  bool i_closed() const noexcept { return i_closed_; }
  bool admissible() const noexcept { return contains_basis_ && i_closed_; }
  bool contains_zero() const noexcept;

  /// f(A) as a subset of C_{2 dim}.
  const SymmetricCubeSet& embedded() const noexcept { return embedded_; }

  friend bool operator==(const GaussianSet& a, const GaussianSet& b) noexcept {
    return a.dim_ == b.dim_ && a.members_ == b.members_;
  }

 private:
  int dim_ = 0;
  std::vector<GaussianVector> members_;
  SymmetricCubeSet embedded_;
  bool contains_basis_ = false;
  bool i_closed_ = true;
};

/// S together with iS, -S, -iS.
GaussianSet i_closure(std::span<const GaussianVector> s, int dim);

}  // namespace kottman
