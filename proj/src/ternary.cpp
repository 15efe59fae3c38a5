#include "kottman/ternary.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "kottman/errors.hpp"

namespace kottman {
namespace {

constexpr std::array<std::uint64_t, 41> make_pow3() {
  std::array<std::uint64_t, 41> p{};
  p[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * 3;
  return p;
}
constexpr auto kPow3 = make_pow3();

// kByteCode[k][b]: sum of 3^(8k+i) over the set bits i of byte b.
constexpr std::array<std::array<std::uint64_t, 256>, 5> make_byte_code() {
  std::array<std::array<std::uint64_t, 256>, 5> t{};
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t b = 0; b < 256; ++b)
      for (std::size_t i = 0; i < 8; ++i)
        if (b >> i & 1U) t[k][b] += kPow3[8 * k + i];
  return t;
}
constexpr auto kByteCode = make_byte_code();

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) throw PreconditionError("dimension out of range: " + std::to_string(dim));
}

void check_same_dim(int a, int b) {
  if (a != b) throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// + < 0 < -
int ternary_rank(const TernaryVector& v, int i) {
  const int c = v[i];
  return c == 1 ? 0 : (c == 0 ? 1 : 2);
}

}  // namespace

TernaryVector::TernaryVector(int dim) : dim_(dim) { check_dim(dim); }


TernaryVector TernaryVector::from_coords(std::span<const int> coords) {
  const int dim = static_cast<int>(coords.size());
  check_dim(dim);
  std::uint64_t pos = 0, neg = 0;
  for (int i = 0; i < dim; ++i) {
    switch (coords[i]) {
      case 1: pos |= std::uint64_t{1} << i; break;
      case 0: break;
      case -1: neg |= std::uint64_t{1} << i; break;
      default: throw PreconditionError("coordinate outside {-1,0,1}: " + std::to_string(coords[i]));
    }
  }
  return from_masks(dim, pos, neg);
}

TernaryVector TernaryVector::parse(std::string_view text) {
  const int dim = static_cast<int>(text.size());
  if (dim == 0) throw PreconditionError("empty ternary vector");
  check_dim(dim);
  std::uint64_t pos = 0, neg = 0;
  for (int i = 0; i < dim; ++i) {
    switch (text[i]) {
      case '+': pos |= std::uint64_t{1} << i; break;
      case '0': break;
      case '-': neg |= std::uint64_t{1} << i; break;
      default: throw PreconditionError("bad ternary digit '" + std::string(1, text[i]) + "'");
    }
  }
  return from_masks(dim, pos, neg);
}

std::vector<int> TernaryVector::coords() const {
  std::vector<int> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = (*this)[i];
  return out;
}

TernaryVector TernaryVector::extended(int xi) const {
  if (dim_ >= kMaxDim) throw PreconditionError("cannot extend beyond dimension 64");
  const std::uint64_t bit = std::uint64_t{1} << dim_;
  switch (xi) {
    case 1: return from_masks(dim_ + 1, pos_ | bit, neg_);
    case 0: return from_masks(dim_ + 1, pos_, neg_);
    case -1: return from_masks(dim_ + 1, pos_, neg_ | bit);
    default: throw PreconditionError("extension digit outside {-1,0,1}");
  }
}

std::uint64_t TernaryVector::code() const noexcept {
  std::uint64_t c = 0;
  const int chunks = std::min(5, (dim_ + 7) / 8);
  for (int k = 0; k < chunks; ++k)
    c += kByteCode[k][(pos_ >> (8 * k)) & 0xFF] + 2 * kByteCode[k][(neg_ >> (8 * k)) & 0xFF];
  return c;
}

std::pair<std::uint64_t, std::uint64_t> TernaryVector::code_parts() const noexcept {
  std::uint64_t p = 0, n = 0;
  const int chunks = std::min(5, (dim_ + 7) / 8);
  for (int k = 0; k < chunks; ++k) {
    p += kByteCode[k][(pos_ >> (8 * k)) & 0xFF];
    n += kByteCode[k][(neg_ >> (8 * k)) & 0xFF];
  }
  return {p, n};
}

std::string TernaryVector::to_string() const {
  std::string s(dim_, '0');
  for (int i = 0; i < dim_; ++i) {
    const int c = (*this)[i];
    if (c == 1) s[i] = '+';
    else if (c == -1) s[i] = '-';
  }
  return s;
}

std::strong_ordering operator<=>(const TernaryVector& a, const TernaryVector& b) noexcept {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  const std::uint64_t diff = (a.pos_ ^ b.pos_) | (a.neg_ ^ b.neg_);
  if (diff == 0) return std::strong_ordering::equal;
  const int k = std::countr_zero(diff);
  return ternary_rank(a, k) <=> ternary_rank(b, k);
}

bool IntegerVector::in_cube() const noexcept {
  for (int c : coords)
    if (c < -1 || c > 1) return false;
  return true;
}

TernaryVector basis_vector(int dim, int k) {
  check_dim(dim);
  if (dim < 1 || k < 1 || k > dim)
    throw PreconditionError("basis index " + std::to_string(k) + " out of range for dimension " + std::to_string(dim));
  return TernaryVector::from_masks(dim, std::uint64_t{1} << (k - 1), 0);
}

std::optional<TernaryVector> ternary_difference(const TernaryVector& x, const TernaryVector& y) {
  check_same_dim(x.dim(), y.dim());
  if (!difference_in_cube(x, y)) return std::nullopt;
  return unchecked_difference(x, y);
}

std::optional<TernaryVector> ternary_sum(const TernaryVector& x, const TernaryVector& y) {
  return ternary_difference(x, -y);
}

IntegerVector raw_difference(const TernaryVector& x, const TernaryVector& y) {
  check_same_dim(x.dim(), y.dim());
  IntegerVector r;
  r.coords.resize(x.dim());
  for (int i = 0; i < x.dim(); ++i) r.coords[i] = x[i] - y[i];
  return r;
}

IntegerVector raw_sum(const TernaryVector& x, const TernaryVector& y) { return raw_difference(x, -y); }

TernaryVector project(const TernaryVector& x, int n) {
  if (n < 1 || n > x.dim())
    throw PreconditionError("projection length " + std::to_string(n) + " out of range for dimension " +
                            std::to_string(x.dim()));
  return TernaryVector::from_masks(n, x.positive_mask(), x.negative_mask());
}

TernaryVector permute(const TernaryVector& x, std::span<const int> perm) {
  check_same_dim(x.dim(), static_cast<int>(perm.size()));
  std::uint64_t pos = 0, neg = 0;
  for (int i = 0; i < x.dim(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << perm[i];
    if (x[i] == 1) pos |= bit;
    else if (x[i] == -1) neg |= bit;
  }
  return TernaryVector::from_masks(x.dim(), pos, neg);
}

// Gaussian vectors

GaussianVector::GaussianVector(int dim) : re_(dim), im_(dim) {}

GaussianVector::GaussianVector(TernaryVector re, TernaryVector im) : re_(re), im_(im) {
  check_same_dim(re.dim(), im.dim());
  if (re.support() & im.support()) throw PreconditionError("Gaussian coordinate with both parts nonzero");
}

GaussianVector GaussianVector::from_digits(std::span<const int> digits) {
  const int dim = static_cast<int>(digits.size());
  check_dim(dim);
  std::uint64_t rp = 0, rn = 0, ip = 0, in = 0;
  for (int i = 0; i < dim; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    switch (digits[i]) {
      case 0: break;
      case 1: rp |= bit; break;
      case 2: rn |= bit; break;
      case 3: ip |= bit; break;
      case 4: in |= bit; break;
      default: throw PreconditionError("bad Gaussian digit code");
    }
  }
  return {TernaryVector::from_masks(dim, rp, rn), TernaryVector::from_masks(dim, ip, in)};
}

GaussianVector GaussianVector::parse(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty Gaussian vector");
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': digits.push_back(0); break;
      case '+': digits.push_back(1); break;
      case '-': digits.push_back(2); break;
      case 'i': digits.push_back(3); break;
      case 'j': digits.push_back(4); break;
      default: throw PreconditionError("bad Gaussian digit '" + std::string(1, c) + "'");
    }
  }
  return from_digits(digits);
}

int GaussianVector::digit(int i) const noexcept {
  switch (re_[i]) {
    case 1: return 1;
    case -1: return 2;
    default: break;
  }
  switch (im_[i]) {
    case 1: return 3;
    case -1: return 4;
    default: return 0;
  }
}

std::string GaussianVector::to_string() const {
  static constexpr char kAlphabet[] = {'0', '+', '-', 'i', 'j'};
  std::string s(dim(), '0');
  for (int i = 0; i < dim(); ++i) s[i] = kAlphabet[digit(i)];
  return s;
}

std::strong_ordering operator<=>(const GaussianVector& a, const GaussianVector& b) noexcept {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  const std::uint64_t diff = (a.re_.positive_mask() ^ b.re_.positive_mask()) |
                             (a.re_.negative_mask() ^ b.re_.negative_mask()) |
                             (a.im_.positive_mask() ^ b.im_.positive_mask()) |
                             (a.im_.negative_mask() ^ b.im_.negative_mask());
  if (diff == 0) return std::strong_ordering::equal;
  const int k = std::countr_zero(diff);
  return a.digit(k) <=> b.digit(k);
}

GaussianVector gaussian_basis_vector(int dim, int k) { return {basis_vector(dim, k), TernaryVector(dim)}; }

std::optional<GaussianVector> gaussian_difference(const GaussianVector& x, const GaussianVector& y) {
  check_same_dim(x.dim(), y.dim());
  const auto re = ternary_difference(x.real_part(), y.real_part());
  if (!re) return std::nullopt;
  const auto im = ternary_difference(x.imag_part(), y.imag_part());
  if (!im) return std::nullopt;
  if (re->support() & im->support()) return std::nullopt;
  return GaussianVector(*re, *im);
}

TernaryVector embed_real(const GaussianVector& x) {
  const int n = x.dim();
  if (2 * n > kMaxDim) throw PreconditionError("embedding exceeds dimension 64");
  std::uint64_t pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t re_bit = std::uint64_t{1} << (2 * k);
    const std::uint64_t im_bit = std::uint64_t{1} << (2 * k + 1);
    switch (x.real_part()[k]) {
      case 1: pos |= re_bit; break;
      case -1: neg |= re_bit; break;
      default: break;
    }
    switch (x.imag_part()[k]) {
      case 1: pos |= im_bit; break;
      case -1: neg |= im_bit; break;
      default: break;
    }
  }
  return TernaryVector::from_masks(2 * n, pos, neg);
}

std::optional<GaussianVector> unembed_real(const TernaryVector& y) {
  if (y.dim() % 2 != 0) throw PreconditionError("embedded vector must have even dimension");
  const int n = y.dim() / 2;
  std::vector<int> re(n), im(n);
  for (int k = 0; k < n; ++k) {
    re[k] = y[2 * k];
    im[k] = y[2 * k + 1];
    if (re[k] != 0 && im[k] != 0) return std::nullopt;
  }
  return GaussianVector(TernaryVector::from_coords(re), TernaryVector::from_coords(im));
}

}  // namespace kottman
