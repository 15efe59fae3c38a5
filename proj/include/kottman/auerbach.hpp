#pragma once

#include <string>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/kernels.hpp"
#include "kottman/norm.hpp"

namespace kottman {

/// Unit vectors x_k with unit-norm functionals x*_k, x*_a(x_b) = delta_ab.
/// Exact specs fill `vectors`/`functionals`, float specs `fvectors`/`ffunctionals`.
struct AuerbachBasis {
  bool exact = true;
  std::vector<RVec> vectors;
  std::vector<RVec> functionals;
  std::vector<CVec> fvectors;
  std::vector<CVec> ffunctionals;
  /// vertex_enumeration, exact_ascent, float_ascent, identity or supplied.
  std::string method;
  double abs_det = 0.0;
  int restart = -1;  // float_ascent only

  int dim() const noexcept { return static_cast<int>(exact ? vectors.size() : fvectors.size()); }
};

struct AuerbachReport {
  bool exact = true;
  double biorthogonality = 0.0;  // max |x*_a(x_b) - delta_ab|
  double norm = 0.0;             // max |‖x_k‖ - 1|
  double dual_norm = 0.0;        // max |‖x*_k‖_* - 1|
  double tau = 0.0;
  bool passed = false;
};

/// Maximizes |det(x_1 .. x_n)| over unit vectors. Small polyhedral balls use
/// exact enumeration of vertex tuples, other exact specs exact coordinate
/// ascent, float specs coordinate ascent with restarts. The result always
/// passes verify_auerbach; otherwise SearchFailure is thrown.
AuerbachBasis auerbach_basis(const NormSpec& spec, const Budgets& budgets = {}, Execution ex = Execution::parallel);

/// e_k / ‖e_k‖ with functionals ‖e_k‖ e_k. Auerbach for every lp norm.
AuerbachBasis identity_basis(const NormSpec& spec);

/// Completes hand-supplied vectors with the dual basis (rows of the inverse).
AuerbachBasis basis_from_vectors(const NormSpec& spec, const std::vector<RVec>& vectors);
AuerbachBasis basis_from_vectors(const NormSpec& spec, const std::vector<CVec>& vectors);

AuerbachReport verify_auerbach(const AuerbachBasis& basis, const NormSpec& spec, double tau = 1e-9);

/// T(x) = (x*_k(x))_k.
RVec coefficient_map(const AuerbachBasis& basis, const RVec& x);
CVec coefficient_map(const AuerbachBasis& basis, const CVec& x);

/// sum_k a_k x_k.
RVec combine(const AuerbachBasis& basis, const std::vector<int>& a);
CVec combine(const AuerbachBasis& basis, const CVec& a);

}  // namespace kottman
