#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kottman {

inline constexpr int kMaxDim = 64;

/// Point of the cube {0,+1,-1}^dim packed as two disjoint bit masks.
/// Coordinate i (0-based) lives in bit i.
///
/// Ordering is lexicographic from the first coordinate with digits ordered
/// + < 0 < -, which is also the order in which extensions are tried.
class TernaryVector {
 public:
  TernaryVector() = default;
  explicit TernaryVector(int dim);

  /// Bits at or above dim are dropped; pos and neg must be disjoint.
  static TernaryVector from_masks(int dim, std::uint64_t pos, std::uint64_t neg) noexcept {
    assert((pos & neg) == 0);
    const std::uint64_t keep = dim >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
    TernaryVector v;
    v.dim_ = dim;
    v.pos_ = pos & keep;
    v.neg_ = neg & keep;
    return v;
  }
  static TernaryVector from_coords(std::span<const int> coords);
  /// Parses a string over {+,0,-}.
  static TernaryVector parse(std::string_view text);

  int dim() const noexcept { return dim_; }
  std::uint64_t positive_mask() const noexcept { return pos_; }
  std::uint64_t negative_mask() const noexcept { return neg_; }
  std::uint64_t support() const noexcept { return pos_ | neg_; }
  bool is_zero() const noexcept { return (pos_ | neg_) == 0; }
  int weight() const noexcept { return std::popcount(pos_ | neg_); }

  /// 0-based coordinate access.
  int operator[](int i) const noexcept {
    return static_cast<int>((pos_ >> i) & 1U) - static_cast<int>((neg_ >> i) & 1U);
  }
  std::vector<int> coords() const;

  TernaryVector operator-() const noexcept {
    TernaryVector r = *this;
    std::swap(r.pos_, r.neg_);
    return r;
  }

  /// Appends one coordinate: (x, xi).
  TernaryVector extended(int xi) const;
  /// Index of this vector in base 3 (digit 0 for 0, 1 for +, 2 for -).
  std::uint64_t code() const noexcept;
  /// {c+, c-} with code() = c+ + 2 c-; the code of -x is c- + 2 c+.
  std::pair<std::uint64_t, std::uint64_t> code_parts() const noexcept;

  std::string to_string() const;

  friend bool operator==(const TernaryVector&, const TernaryVector&) = default;
  friend std::strong_ordering operator<=>(const TernaryVector& a, const TernaryVector& b) noexcept;

 private:
  int dim_ = 0;
  std::uint64_t pos_ = 0;
  std::uint64_t neg_ = 0;
};

/// Integer vector carrying a difference or sum that may have left the cube.
struct IntegerVector {
  std::vector<int> coords;
  int dim() const noexcept { return static_cast<int>(coords.size()); }
  bool in_cube() const noexcept;
  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
};

/// e_k with k 1-based, as in the usual notation.
TernaryVector basis_vector(int dim, int k);

/// x - y when it stays in the cube, std::nullopt when some coordinate is +-2.
std::optional<TernaryVector> ternary_difference(const TernaryVector& x, const TernaryVector& y);
/// x + y when it stays in the cube.
std::optional<TernaryVector> ternary_sum(const TernaryVector& x, const TernaryVector& y);

/// Diagnostics only: the raw integer difference/sum.
IntegerVector raw_difference(const TernaryVector& x, const TernaryVector& y);
IntegerVector raw_sum(const TernaryVector& x, const TernaryVector& y);

/// Prefix of length n.
TernaryVector project(const TernaryVector& x, int n);

/// Applies a coordinate permutation: result[perm[i]] = x[i].
TernaryVector permute(const TernaryVector& x, std::span<const int> perm);

// Branch-free kernels used on hot paths. They assume equal dimensions.
inline bool difference_in_cube(const TernaryVector& x, const TernaryVector& y) noexcept {
  return ((x.positive_mask() & y.negative_mask()) | (x.negative_mask() & y.positive_mask())) == 0;
}
inline TernaryVector unchecked_difference(const TernaryVector& x, const TernaryVector& y) noexcept {
  const std::uint64_t pos = (x.positive_mask() & ~y.positive_mask()) | (y.negative_mask() & ~x.negative_mask());
  const std::uint64_t neg = (x.negative_mask() & ~y.negative_mask()) | (y.positive_mask() & ~x.positive_mask());
  return TernaryVector::from_masks(x.dim(), pos, neg);
}

/// Point of the Gaussian cube {0,+1,-1,+i,-i}^dim, stored as a real and an
/// imaginary ternary part with disjoint supports.
///
/// Serialized over the alphabet {0,+,-,i,j} (j = -i); ordered lexicographically
/// with digits 0 < + < - < i < j.
class GaussianVector {
 public:
  GaussianVector() = default;
  explicit GaussianVector(int dim);
  GaussianVector(TernaryVector re, TernaryVector im);

  static GaussianVector parse(std::string_view text);
  /// Digit codes: 0, 1 (+1), 2 (-1), 3 (+i), 4 (-i).
  static GaussianVector from_digits(std::span<const int> digits);

  int dim() const noexcept { return re_.dim(); }
  const TernaryVector& real_part() const noexcept { return re_; }
  const TernaryVector& imag_part() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  /// Digit code of coordinate i.
  int digit(int i) const noexcept;

  GaussianVector operator-() const { return {-re_, -im_}; }
  GaussianVector times_i() const { return {-im_, re_}; }

  std::string to_string() const;

  friend bool operator==(const GaussianVector&, const GaussianVector&) = default;
  friend std::strong_ordering operator<=>(const GaussianVector& a, const GaussianVector& b) noexcept;

 private:
  TernaryVector re_;
  TernaryVector im_;
};

GaussianVector gaussian_basis_vector(int dim, int k);
/// Coordinatewise multiplication by i.
inline GaussianVector i_multiply(const GaussianVector& x) { return x.times_i(); }
/// x - y when every coordinate stays in {0,+-1,+-i}.
std::optional<GaussianVector> gaussian_difference(const GaussianVector& x, const GaussianVector& y);
/// f(a_1 + b_1 i, ..., a_n + b_n i) = (a_1, b_1, ..., a_n, b_n).
TernaryVector embed_real(const GaussianVector& x);
/// Inverse of embed_real on vectors whose coordinate pairs are never both nonzero.
std::optional<GaussianVector> unembed_real(const TernaryVector& y);

}  // namespace kottman

template <>
struct std::hash<kottman::TernaryVector> {
  std::size_t operator()(const kottman::TernaryVector& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.positive_mask() * 0x9E3779B97F4A7C15ULL ^ v.negative_mask());
  }
};
