#pragma once

#include <string>
#include <vector>

#include "kottman/auerbach.hpp"
#include "kottman/cube_set.hpp"
#include "kottman/ternary.hpp"

namespace kottman {

enum class SeparationMode { difference, sum, complex };

const char* to_string(SeparationMode m) noexcept;
SeparationMode parse_separation_mode(const std::string& s);

/// Coefficient vectors a in C_N with ‖sum a_k x_k‖ = 1 (exactly, or within tau).
struct UnitTernarySet {
  int dim = 0;
  bool exact = true;
  double tau = 0.0;
  std::vector<TernaryVector> members;
};

struct UnitGaussianSet {
  int dim = 0;
  double tau = 0.0;
  std::vector<GaussianVector> members;
};

/// Throws BudgetExceeded for N > budgets.unit_ternary_max_dim.
UnitTernarySet enumerate_unit_ternary(const AuerbachBasis& basis, const NormSpec& spec, const Budgets& budgets = {},
                                      Execution ex = Execution::parallel);
/// Throws BudgetExceeded for n > budgets.gaussian_coefficient_max_dim.
UnitGaussianSet enumerate_unit_gaussian(const AuerbachBasis& basis, const NormSpec& spec, const Budgets& budgets = {},
                                        Execution ex = Execution::parallel);

struct SeparatedFamily {
  SeparationMode mode = SeparationMode::difference;
  NormSpec spec;
  AuerbachBasis basis;
  bool exact = true;
  std::vector<TernaryVector> witness;           // difference and sum modes
  std::vector<GaussianVector> gaussian_witness;  // complex mode
  std::size_t unit_set_size = 0;
  std::vector<RVec> points;   // exact
  std::vector<CVec> fpoints;  // float
  /// Pairwise ‖z_k - z_l‖ (or ‖z_k + z_l‖ in sum mode); diagonal left at 0.
  RMat table;
  std::vector<std::vector<double>> ftable;
  Rational margin;  // exact
  double fmargin = 0.0;
  double tau = 0.0;
  double mu = 0.0;

  std::size_t size() const noexcept { return exact ? points.size() : fpoints.size(); }
};

/// auerbach_basis -> enumerate unit combinations -> free set -> pull back.
/// Errors from any stage surface as PipelineError tagged with the stage.
SeparatedFamily separate(SeparationMode mode, const NormSpec& spec, const Budgets& budgets = {},
                         Execution ex = Execution::parallel);
/// Same pipeline with a given (already verified) basis.
SeparatedFamily separate_with_basis(SeparationMode mode, const NormSpec& spec, const AuerbachBasis& basis,
                                    const Budgets& budgets = {}, Execution ex = Execution::parallel);

inline SeparatedFamily separated_points(const NormSpec& spec, const Budgets& budgets = {}) {
  return separate(SeparationMode::difference, spec, budgets);
}
inline SeparatedFamily plus_separated_points(const NormSpec& spec, const Budgets& budgets = {}) {
  return separate(SeparationMode::sum, spec, budgets);
}
inline SeparatedFamily complex_separated_points(const NormSpec& spec, const Budgets& budgets = {}) {
  return separate(SeparationMode::complex, spec, budgets);
}

struct SeparationReport {
  bool exact = true;
  bool units_ok = false;
  double unit_residual = 0.0;
  Rational margin;
  double fmargin = 0.0;
  bool passed = false;
};

/// Recomputes every unit norm and pairwise value from the points alone.
SeparationReport verify_separation(const SeparatedFamily& family, const NormSpec& spec, double tau = 1e-9,
                                   double mu = 1e-6);

}  // namespace kottman
