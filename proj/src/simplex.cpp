#include "kottman/simplex.hpp"

#include <cstddef>

#include "kottman/errors.hpp"

namespace kottman {
namespace {

struct Tableau {
  std::size_t m = 0;
  std::size_t n = 0;  // structural columns; artificials follow
  RMat t;             // m x (n + m)
  RVec rhs;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t e) {
    const Rational p = t[r][e];
    for (auto& v : t[r]) v /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][e] == 0) continue;
      const Rational f = t[i][e];
      for (std::size_t j = 0; j < t[i].size(); ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = e;
  }

  // Returns false when unbounded.
  bool optimize(const RVec& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed && enter == allowed; ++j) {
        Rational r = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (t[i][j] != 0) r -= cost[basis[i]] * t[i][j];
        if (r < 0) enter = j;
      }
      if (enter == allowed) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = rhs[i] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const RMat& a, const RVec& b, const RVec& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw PreconditionError("solve_lp: row count mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("solve_lp: column count mismatch");

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(m, RVec(n + m, 0));
  tab.rhs = b;
  tab.basis.resize(m);
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign[i] * a[i][j];
    tab.rhs[i] = sign[i] * b[i];
    tab.t[i][n + i] = 1;
    tab.basis[i] = n + i;
  }

  RVec phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.optimize(phase1, n + m);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeasibility += tab.rhs[i];
  LpResult res;
  if (infeasibility > 0) return res;

  // Move artificials at level zero out of the basis; rows where that is
  // impossible are redundant and stay inert.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  RVec cost(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!tab.optimize(cost, n)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs[i];
  res.objective = dot(c, res.x);
  // Artificial columns hold B^{-1} of the sign-adjusted system.
  res.dual.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    Rational y = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (tab.t[i][n + r] != 0) y += cost[tab.basis[i]] * tab.t[i][n + r];
    res.dual[r] = sign[r] * y;
  }
  return res;
}

GaugeResult polytope_gauge(const RMat& points, const RVec& v) {
  const std::size_t k = points.size();
  const std::size_t dim = v.size();
  RMat a(dim, RVec(2 * k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    if (points[j].size() != dim) throw PreconditionError("polytope_gauge: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
      a[i][j] = points[j][i];
      a[i][k + j] = -points[j][i];
    }
  }
  const RVec c(2 * k, 1);
  auto lp = solve_lp(a, v, c);
  if (lp.status != LpStatus::optimal) throw DegenerateSpec("vector is outside the span of the polytope points");
  GaugeResult g;
  g.value = lp.objective;
  g.weights.resize(k);
  for (std::size_t j = 0; j < k; ++j) g.weights[j] = lp.x[j] - lp.x[k + j];
  g.dual = std::move(lp.dual);
  return g;
}

}  // namespace kottman
