#pragma once

#include "kottman/rational.hpp"

namespace kottman {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  RVec x;
  /// Dual solution y: A^T y <= c and b.y = objective at the optimum.
  RVec dual;
};

/// minimize c.x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase tableau simplex with Bland's rule, so it cannot cycle.
LpResult solve_lp(const RMat& a, const RVec& b, const RVec& c);

struct GaugeResult {
  Rational value;
  RVec weights;  // v = sum_j weights_j p_j with sum |weights_j| = value
  RVec dual;     // y with |p_j . y| <= 1 for all j and v . y = value
};

/// Minkowski functional of conv(+-p_j) at v. Throws DegenerateSpec when v is
/// outside the span of the points.
GaugeResult polytope_gauge(const RMat& points, const RVec& v);

}  // namespace kottman
