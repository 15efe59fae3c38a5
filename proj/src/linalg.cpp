#include "kottman/linalg.hpp"

#include <Eigen/Dense>

#include "kottman/errors.hpp"

namespace kottman {
namespace {

using EigenMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

void check_square(std::size_t rows, const auto& m) {
  for (const auto& r : m)
    if (r.size() != rows) throw PreconditionError("matrix is not square");
}

EigenMat to_eigen(const CMat& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  EigenMat e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m[i][j];
  return e;
}

// Row echelon form in place; returns the rank and the sign of the row swaps.
std::size_t eliminate(RMat& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(RMat m) {
  int sign = 1;
  return eliminate(m, sign);
}

Rational determinant(RMat m) {
  check_square(m.size(), m);
  int sign = 1;
  if (eliminate(m, sign) < m.size()) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < m.size(); ++i) d *= m[i][i];
  return d;
}

std::optional<RMat> inverse(const RMat& m) {
  const std::size_t n = m.size();
  check_square(n, m);
  RMat a(n, RVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    const Rational piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RMat inv(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

Complex determinant(const CMat& m) {
  check_square(m.size(), m);
  if (m.empty()) return 1.0;
  return to_eigen(m).fullPivLu().determinant();
}

std::optional<CMat> inverse(const CMat& m) {
  check_square(m.size(), m);
  const auto lu = to_eigen(m).fullPivLu();
  if (!lu.isInvertible()) return std::nullopt;
  const EigenMat inv = lu.inverse();
  CMat out(m.size(), CVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

RMat from_columns(const std::vector<RVec>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols[0].size();
  RMat m(n, RVec(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].size() != n) throw PreconditionError("columns of different lengths");
    for (std::size_t i = 0; i < n; ++i) m[i][k] = cols[k][i];
  }
  return m;
}

CMat from_columns(const std::vector<CVec>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols[0].size();
  CMat m(n, CVec(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].size() != n) throw PreconditionError("columns of different lengths");
    for (std::size_t i = 0; i < n; ++i) m[i][k] = cols[k][i];
  }
  return m;
}

CVec to_complex(const RVec& v) {
  CVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q.get_d(), 0.0);
  return out;
}

}  // namespace kottman
