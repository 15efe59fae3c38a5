#include "kottman/separation.hpp"

#include <algorithm>
#include <cmath>

#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"
#include "kottman/gaussian.hpp"

namespace kottman {
namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t p = 1;
  for (int i = 0; i < e; ++i) p *= b;
  return p;
}

// Runs one pipeline stage, tagging any failure with the stage name.
template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const BudgetExceeded& e) {
    throw PipelineError(name, e.what(), true);
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

// Enumerates digit vectors of length n over `base` whose first nonzero digit
// is 1, chunked on the leading digits for the parallel loop.
template <class Visit>
std::vector<std::vector<std::vector<int>>> scan_digits(int n, int base, Execution ex, Visit&& unit) {
  const int head = std::min(n, 5);
  const std::uint64_t chunks = ipow(base, head);
  const std::uint64_t inner = ipow(base, n - head);
  std::vector<std::vector<std::vector<int>>> found(chunks);
  for_each_index(ex, static_cast<std::int64_t>(chunks), [&](std::int64_t c) {
    std::vector<int> d(n);
    for (std::uint64_t r = 0; r < inner; ++r) {
      std::uint64_t x = static_cast<std::uint64_t>(c);
      for (int i = head - 1; i >= 0; --i, x /= base) d[i] = static_cast<int>(x % base);
      x = r;
      for (int i = n - 1; i >= head; --i, x /= base) d[i] = static_cast<int>(x % base);
      const auto lead = std::find_if(d.begin(), d.end(), [](int v) { return v != 0; });
      if (lead == d.end() || *lead != 1) continue;
      if (unit(d)) found[c].push_back(d);
    }
  });
  return found;
}

const Complex kGaussianDigit[5] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};

}  // namespace

const char* to_string(SeparationMode m) noexcept {
  switch (m) {
    case SeparationMode::difference:
      return "difference";
    case SeparationMode::sum:
      return "sum";
    case SeparationMode::complex:
      return "complex";
  }
  return "?";
}

SeparationMode parse_separation_mode(const std::string& s) {
  if (s == "diff" || s == "difference") return SeparationMode::difference;
  if (s == "sum") return SeparationMode::sum;
  if (s == "complex") return SeparationMode::complex;
  throw PreconditionError("unknown separation mode '" + s + "'");
}

UnitTernarySet enumerate_unit_ternary(const AuerbachBasis& basis, const NormSpec& spec, const Budgets& budgets,
                                      Execution ex) {
  const int n = spec.dim;
  if (spec.field != ScalarField::real) throw PreconditionError("ternary combinations need a real spec");
  if (basis.dim() != n) throw PreconditionError("basis dimension does not match the spec");
  if (n > budgets.unit_ternary_max_dim)
    throw BudgetExceeded("3^N enumeration for N = " + std::to_string(n) + " exceeds the budget N <= " +
                         std::to_string(budgets.unit_ternary_max_dim));
  if (n > kMaxDim) throw PreconditionError("dimension too large for ternary vectors");
  const bool exact = basis.exact && spec.exact();
  const double tau = budgets.tau;
  auto coeffs = [](const std::vector<int>& d) {
    std::vector<int> a(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) a[i] = d[i] == 2 ? -1 : d[i];
    return a;
  };
  auto found = scan_digits(n, 3, ex, [&](const std::vector<int>& d) {
    const auto a = coeffs(d);
    if (exact) return norm_exact(spec, combine(basis, a)) == 1;
    CVec c(a.begin(), a.end());
    return std::abs(norm_float(spec, combine(basis, c)) - 1.0) <= tau;
  });
  UnitTernarySet out;
  out.dim = n;
  out.exact = exact;
  out.tau = exact ? 0.0 : tau;
  for (const auto& chunk : found)
    for (const auto& d : chunk) {
      const auto x = TernaryVector::from_coords(coeffs(d));
      out.members.push_back(x);
      out.members.push_back(-x);
    }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

UnitGaussianSet enumerate_unit_gaussian(const AuerbachBasis& basis, const NormSpec& spec, const Budgets& budgets,
                                        Execution ex) {
  const int n = spec.dim;
  if (spec.field != ScalarField::complex) throw PreconditionError("Gaussian combinations need a complex spec");
  if (basis.dim() != n) throw PreconditionError("basis dimension does not match the spec");
  if (n > budgets.gaussian_coefficient_max_dim)
    throw BudgetExceeded("5^n enumeration for n = " + std::to_string(n) + " exceeds the budget n <= " +
                         std::to_string(budgets.gaussian_coefficient_max_dim));
  auto found = scan_digits(n, 5, ex, [&](const std::vector<int>& d) {
    CVec a(n);
    for (int i = 0; i < n; ++i) a[i] = kGaussianDigit[d[i]];
    return std::abs(norm_float(spec, combine(basis, a)) - 1.0) <= budgets.tau;
  });
  UnitGaussianSet out;
  out.dim = n;
  out.tau = budgets.tau;
  for (const auto& chunk : found)
    for (const auto& d : chunk) {
      GaussianVector x = GaussianVector::from_digits(d);
      for (int r = 0; r < 4; ++r) {
        out.members.push_back(x);
        x = x.times_i();
      }
    }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

SeparatedFamily separate(SeparationMode mode, const NormSpec& spec, const Budgets& budgets, Execution ex) {
  stage("spec", [&] {
    validate(spec);
    if ((mode == SeparationMode::complex) != (spec.field == ScalarField::complex))
      throw PreconditionError(std::string("mode ") + to_string(mode) + " does not match a " + to_string(spec.field) +
                              " spec");
    return 0;
  });
  const auto basis = stage("auerbach", [&] { return auerbach_basis(spec, budgets, ex); });
  return separate_with_basis(mode, spec, basis, budgets, ex);
}

SeparatedFamily separate_with_basis(SeparationMode mode, const NormSpec& spec, const AuerbachBasis& basis,
                                    const Budgets& budgets, Execution ex) {
  stage("auerbach", [&] {
    const auto r = verify_auerbach(basis, spec, budgets.tau);
    if (!r.passed) throw SearchFailure("supplied basis is not an Auerbach basis");
    return 0;
  });
  SeparatedFamily f;
  f.mode = mode;
  f.spec = spec;
  f.basis = basis;
  f.exact = basis.exact && spec.exact();
  f.tau = f.exact ? 0.0 : budgets.tau;
  f.mu = f.exact ? 0.0 : budgets.mu;
  const int n = spec.dim;

  if (mode == SeparationMode::complex) {
    const auto unit = stage("unit_ternary", [&] {
      auto u = enumerate_unit_gaussian(basis, spec, budgets, ex);
      GaussianSet a(n, u.members);
      if (!a.contains_basis()) throw SearchFailure("a basis vector fell outside the unit sphere tolerance");
      return a;
    });
    f.unit_set_size = unit.size();
    f.gaussian_witness = stage("free_set", [&] { return find_gaussian_difference_free(unit, budgets).witness; });
    stage("pullback", [&] {
      for (const auto& w : f.gaussian_witness) {
        CVec a(n);
        for (int i = 0; i < n; ++i) a[i] = kGaussianDigit[w.digit(i)];
        f.fpoints.push_back(combine(basis, a));
      }
      return 0;
    });
  } else {
    const auto unit = stage("unit_ternary", [&] {
      auto u = enumerate_unit_ternary(basis, spec, budgets, ex);
      SymmetricCubeSet a(n, u.members);
      if (!a.contains_basis()) throw SearchFailure("a basis vector fell outside the unit sphere tolerance");
      return a;
    });
    f.unit_set_size = unit.size();
    f.witness = stage("free_set", [&] {
      return mode == SeparationMode::difference ? find_difference_free(unit, budgets).witness
                                                : find_sum_free(unit, budgets).witness;
    });
    stage("pullback", [&] {
      for (const auto& w : f.witness) {
        if (f.exact)
          f.points.push_back(combine(basis, w.coords()));
        else {
          const auto c = w.coords();
          f.fpoints.push_back(combine(basis, CVec(c.begin(), c.end())));
        }
      }
      return 0;
    });
  }

  stage("verify", [&] {
    const int sign = mode == SeparationMode::sum ? 1 : -1;
    const std::size_t m = f.size();
    if (f.exact) {
      f.table.assign(m, RVec(m, 0));
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          RVec v = f.points[k];
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += sign * f.points[l][i];
          f.table[k][l] = f.table[l][k] = norm_exact(spec, v);
        }
    } else {
      f.ftable.assign(m, std::vector<double>(m, 0.0));
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          CVec v = f.fpoints[k];
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += static_cast<double>(sign) * f.fpoints[l][i];
          f.ftable[k][l] = f.ftable[l][k] = norm_float(spec, v);
        }
    }
    const auto r = verify_separation(f, spec, budgets.tau, budgets.mu);
    f.margin = r.margin;
    f.fmargin = r.fmargin;
    if (!r.passed)
      throw SearchFailure("family failed separation check (margin " + std::to_string(r.fmargin) + ", unit residual " +
                          std::to_string(r.unit_residual) + ")");
    return 0;
  });
  return f;
}

SeparationReport verify_separation(const SeparatedFamily& family, const NormSpec& spec, double tau, double mu) {
  SeparationReport r;
  const int sign = family.mode == SeparationMode::sum ? 1 : -1;
  const std::size_t n = static_cast<std::size_t>(spec.dim);
  r.exact = family.exact && spec.exact();
  if (r.exact) {
    if (family.points.empty()) return r;
    r.units_ok = true;
    bool first = true;
    for (std::size_t k = 0; k < family.points.size(); ++k) {
      if (family.points[k].size() != n) return r;
      const Rational u = norm_exact(spec, family.points[k]);
      if (u != 1) r.units_ok = false;
      r.unit_residual = std::max(r.unit_residual, abs_value(u - 1).get_d());
      for (std::size_t l = 0; l < k; ++l) {
        RVec v = family.points[l];
        for (std::size_t i = 0; i < n; ++i) v[i] += sign * family.points[k][i];
        const Rational d = norm_exact(spec, v) - 1;
        if (first || d < r.margin) r.margin = d;
        first = false;
      }
    }
    r.fmargin = r.margin.get_d();
    r.passed = r.units_ok && (first || r.margin > 0);
    return r;
  }
  if (family.fpoints.empty()) return r;
  bool first = true;
  for (std::size_t k = 0; k < family.fpoints.size(); ++k) {
    if (family.fpoints[k].size() != n) return r;
    r.unit_residual = std::max(r.unit_residual, std::abs(norm_float(spec, family.fpoints[k]) - 1.0));
    for (std::size_t l = 0; l < k; ++l) {
      CVec v = family.fpoints[l];
      for (std::size_t i = 0; i < n; ++i) v[i] += static_cast<double>(sign) * family.fpoints[k][i];
      const double d = norm_float(spec, v) - 1.0;
      if (first || d < r.fmargin) r.fmargin = d;
      first = false;
    }
  }
  r.units_ok = r.unit_residual <= tau;
  r.margin = r.fmargin;
  r.passed = r.units_ok && (first || r.fmargin >= mu);
  return r;
}

}  // namespace kottman
