#pragma once

#include <string>

#include "kottman/linalg.hpp"
#include "kottman/rational.hpp"

namespace kottman {

enum class ScalarField { real, complex };
enum class NormKind { lp, polytope_facets, polytope_vertices };

const char* to_string(ScalarField f) noexcept;
const char* to_string(NormKind k) noexcept;

struct NormSpec {
  int dim = 0;
  ScalarField field = ScalarField::real;
  NormKind kind = NormKind::lp;
  bool p_infinite = false;
  Rational p = 2;
  /// Real lp only: coordinates (2k, 2k+1) are the real and imaginary parts of
  /// one complex coordinate, so this is complex lp on C^(dim/2) seen as R^dim.
  bool complex_pairs = false;
  RMat functionals;  // unit ball {x : |f.x| <= 1 for all f}
  RMat points;       // unit ball conv(+-points)

  /// Norm values are decided in exact rational arithmetic.
  bool exact() const noexcept;
  /// Short label: "l1", "linf", "l2", "l3/2", "facets", "vertices", with a "C" prefix for complex.
  std::string label() const;
};

NormSpec lp_norm(int dim, const std::string& p, ScalarField field = ScalarField::real);
NormSpec facet_norm(RMat functionals);
NormSpec vertex_norm(RMat points);

/// Throws DegenerateSpec when the norm is not definite and PreconditionError
/// for malformed or unsupported specs.
void validate(const NormSpec& spec);

/// Exact path. Throws PreconditionError when !spec.exact().
Rational norm_exact(const NormSpec& spec, const RVec& v);
Rational dual_norm_exact(const NormSpec& spec, const RVec& phi);
/// A unit vector x maximizing phi.x; phi.x equals the dual norm. Always a vertex of the ball.
RVec lmo_exact(const NormSpec& spec, const RVec& phi);

/// Float path; the pairing is phi(x) = sum phi_k x_k without conjugation.
double norm_float(const NormSpec& spec, const CVec& v);
double dual_norm_float(const NormSpec& spec, const CVec& phi);
/// A unit vector x maximizing Re phi(x).
CVec lmo_float(const NormSpec& spec, const CVec& phi);

/// Exact when the spec allows it, otherwise a float carrying its tolerance.
struct Scalar {
  bool exact = true;
  Rational value;
  double approx = 0.0;
  double tau = 0.0;
};

Scalar norm_eval(const NormSpec& spec, const RVec& v, double tau = 1e-9);
Scalar dual_norm_eval(const NormSpec& spec, const RVec& phi, double tau = 1e-9);

}  // namespace kottman
