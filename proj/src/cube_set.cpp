#include "kottman/cube_set.hpp"

#include <algorithm>
#include <bit>

#include "kottman/errors.hpp"

namespace kottman {
namespace {

constexpr int kDenseMaxDim = 13;

std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

// Sorts into canonical order. Large sets in small dimension are bucketed by
// canonical rank (first coordinate most significant, digits + < 0 < -), which
// avoids comparison sorting.
void canonicalize(std::vector<TernaryVector>& v, int dim) {
  if (dim > kDenseMaxDim || v.size() < 256) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return;
  }
  std::uint64_t w[kDenseMaxDim];
  std::uint64_t ones = 0;
  for (int i = 0; i < dim; ++i) {
    w[i] = pow3(dim - 1 - i);
    ones += w[i];
  }
  std::vector<std::uint32_t> slot(pow3(dim), 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    std::uint64_t key = ones;
    for (std::uint64_t m = v[j].negative_mask(); m; m &= m - 1) key += w[std::countr_zero(m)];
    for (std::uint64_t m = v[j].positive_mask(); m; m &= m - 1) key -= w[std::countr_zero(m)];
    slot[key] = static_cast<std::uint32_t>(j + 1);
  }
  std::vector<TernaryVector> out;
  out.reserve(v.size());
  for (auto s : slot)
    if (s) out.push_back(v[s - 1]);
  v.swap(out);
}

}  // namespace

SymmetricCubeSet::SymmetricCubeSet(int dim, std::vector<TernaryVector> members)
    : dim_(dim), members_(std::move(members)) {
  if (dim < 1 || dim > kMaxDim) throw PreconditionError("set dimension out of range");
  for (const auto& m : members_)
    if (m.dim() != dim) throw PreconditionError("member of dimension " + std::to_string(m.dim()) + " in a set of dimension " + std::to_string(dim));
  canonicalize(members_, dim_);
  finish();
}

SymmetricCubeSet SymmetricCubeSet::from_canonical(int dim, std::vector<TernaryVector> sorted_unique) {
  SymmetricCubeSet a;
  a.dim_ = dim;
  a.members_ = std::move(sorted_unique);
  a.finish();
  return a;
}

void SymmetricCubeSet::finish() {
  contains_basis_ = true;
  if (dim_ <= kDenseMaxDim) {
    dense_.assign((pow3(dim_) + 63) / 64, 0);
    std::vector<std::uint64_t> negated;
    negated.reserve(members_.size());
    for (const auto& m : members_) {
      const auto [p, n] = m.code_parts();
      const std::uint64_t c = p + 2 * n;
      dense_[c >> 6] |= std::uint64_t{1} << (c & 63);
      negated.push_back(n + 2 * p);
    }
    symmetric_ = std::all_of(negated.begin(), negated.end(), [&](std::uint64_t c) { return (dense_[c >> 6] >> (c & 63)) & 1U; });
  } else {
    symmetric_ = std::all_of(members_.begin(), members_.end(), [&](const TernaryVector& x) { return contains(-x); });
  }
  for (int k = 1; k <= dim_; ++k)
    if (!contains(basis_vector(dim_, k))) {
      contains_basis_ = false;
      break;
    }
}

bool SymmetricCubeSet::contains(const TernaryVector& x) const noexcept {
  if (x.dim() != dim_) return false;
  if (!dense_.empty()) {
    const std::uint64_t c = x.code();
    return (dense_[c >> 6] >> (c & 63)) & 1U;
  }
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::size_t SymmetricCubeSet::index_of(const TernaryVector& x) const noexcept {
  if (x.dim() != dim_) return npos;
  const auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return npos;
  return static_cast<std::size_t>(it - members_.begin());
}

bool SymmetricCubeSet::contains_zero() const noexcept { return dim_ > 0 && contains(TernaryVector(dim_)); }

SymmetricCubeSet project_set(const SymmetricCubeSet& a, int n) {
  if (n < 1 || n > a.dim())
    throw PreconditionError("projection length " + std::to_string(n) + " out of range for dimension " +
                            std::to_string(a.dim()));
  if (n == a.dim()) return a;
  // Prefixes of a canonically sorted list are sorted, with equal ones adjacent.
  const std::uint64_t keep = (std::uint64_t{1} << n) - 1;
  std::vector<TernaryVector> out;
  out.reserve(a.size());
  for (const auto& x : a.members()) {
    const auto p = TernaryVector::from_masks(n, x.positive_mask() & keep, x.negative_mask() & keep);
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return SymmetricCubeSet::from_canonical(n, std::move(out));
}

std::vector<TernaryVector> extensions_of(const TernaryVector& x, const SymmetricCubeSet& a) {
  if (x.dim() + 1 != a.dim())
    throw PreconditionError("extension needs a set one dimension larger than the vector");
  std::vector<TernaryVector> out;
  for (int xi : {1, 0, -1}) {
    const TernaryVector e = x.extended(xi);
    if (a.contains(e)) out.push_back(e);
  }
  return out;
}

SymmetricCubeSet symmetric_closure(std::span<const TernaryVector> s, int dim) {
  std::vector<TernaryVector> out;
  out.reserve(2 * s.size());
  for (const auto& x : s) {
    if (x.dim() != dim) throw PreconditionError("mixed dimensions in symmetric_closure");
    out.push_back(x);
    out.push_back(-x);
  }
  return SymmetricCubeSet(dim, std::move(out));
}

SymmetricCubeSet permute_set(const SymmetricCubeSet& a, std::span<const int> perm) {
  std::vector<TernaryVector> out;
  out.reserve(a.size());
  for (const auto& x : a.members()) out.push_back(permute(x, perm));
  return SymmetricCubeSet(a.dim(), std::move(out));
}

GaussianSet::GaussianSet(int dim, std::vector<GaussianVector> members) : dim_(dim), members_(std::move(members)) {
  if (dim < 1 || 2 * dim > kMaxDim) throw PreconditionError("Gaussian set dimension out of range");
  for (const auto& m : members_)
    if (m.dim() != dim) throw PreconditionError("member dimension mismatch in Gaussian set");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

  std::vector<TernaryVector> images;
  images.reserve(members_.size());
  for (const auto& m : members_) images.push_back(embed_real(m));
  embedded_ = SymmetricCubeSet(2 * dim, std::move(images));

  contains_basis_ = true;
  for (int k = 1; k <= dim_; ++k)
    if (!contains(gaussian_basis_vector(dim_, k))) {
      contains_basis_ = false;
      break;
    }
  i_closed_ = std::all_of(members_.begin(), members_.end(), [&](const GaussianVector& x) { return contains(x.times_i()); });
}

bool GaussianSet::contains_zero() const noexcept { return dim_ > 0 && contains(GaussianVector(dim_)); }

GaussianSet i_closure(std::span<const GaussianVector> s, int dim) {
  std::vector<GaussianVector> out;
  out.reserve(4 * s.size());
  for (const auto& x : s) {
    if (x.dim() != dim) throw PreconditionError("mixed dimensions in i_closure");
    GaussianVector y = x;
    for (int r = 0; r < 4; ++r) {
      out.push_back(y);
      y = y.times_i();
    }
  }
  return GaussianSet(dim, std::move(out));
}

}  // namespace kottman
