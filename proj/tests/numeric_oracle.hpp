// Exact brute-force references for the LP and norm code: basic solutions are
// enumerated directly instead of pivoting.
#pragma once

#include <optional>
#include <vector>

#include "kottman/rational.hpp"

namespace oracle {

using kottman::Rational;
using kottman::RMat;
using kottman::RVec;

/// Unique solution of the square system m y = b, if any.
inline std::optional<RVec> solve_square(RMat m, RVec b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

/// min c.x, A x = b, x >= 0 over basic feasible solutions (A of full row rank, bounded).
inline std::optional<Rational> lp_min(const RMat& a, const RVec& b, const RVec& c) {
  std::optional<Rational> best;
  const std::size_t m = a.size(), n = c.size();
  for_each_subset(n, m, [&](const std::vector<std::size_t>& cols) {
    RMat bm(m, RVec(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) bm[i][j] = a[i][cols[j]];
    const auto x = solve_square(bm, b);
    if (!x) return;
    Rational obj = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((*x)[j] < 0) return;
      obj += c[cols[j]] * (*x)[j];
    }
    if (!best || obj < *best) best = obj;
  });
  return best;
}

/// Vertices of {y : |r.y| <= 1 for every row r}, rows spanning the space.
inline std::vector<RVec> polar_vertices(const RMat& rows) {
  const std::size_t n = rows[0].size();
  std::vector<RVec> out;
  for_each_subset(rows.size(), n, [&](const std::vector<std::size_t>& pick) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      RMat m;
      RVec rhs;
      for (std::size_t i = 0; i < n; ++i) {
        m.push_back(rows[pick[i]]);
        rhs.push_back((s >> i) & 1U ? -1 : 1);
      }
      const auto y = solve_square(m, rhs);
      if (!y) return;
      bool ok = true;
      for (const auto& r : rows) {
        Rational d = 0;
        for (std::size_t i = 0; i < n; ++i) d += r[i] * (*y)[i];
        if (d > 1 || d < -1) ok = false;
      }
      if (ok) out.push_back(*y);
    }
  });
  return out;
}

inline Rational max_abs_pairing(const std::vector<RVec>& pts, const RVec& v) {
  Rational best = 0;
  for (const auto& p : pts) {
    Rational d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += p[i] * v[i];
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

}  // namespace oracle
