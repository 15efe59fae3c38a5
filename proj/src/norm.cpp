#include "kottman/norm.hpp"

#include <algorithm>
#include <cmath>

#include "kottman/errors.hpp"
#include "kottman/simplex.hpp"

namespace kottman {
namespace {

void check_dim(const NormSpec& spec, std::size_t n) {
  if (n != static_cast<std::size_t>(spec.dim))
    throw PreconditionError("vector of length " + std::to_string(n) + " for a norm on dimension " + std::to_string(spec.dim));
}

bool is_l1(const NormSpec& s) { return !s.p_infinite && s.p == 1; }

// Coordinates the lp formula runs over: complex entries, or pairs folded into one.
CVec lp_coordinates(const NormSpec& spec, const CVec& v) {
  if (!spec.complex_pairs) return v;
  CVec z(v.size() / 2);
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = {v[2 * k].real(), v[2 * k + 1].real()};
  return z;
}

double lp_value(const std::vector<double>& m, bool infinite, double p) {
  if (infinite) return m.empty() ? 0.0 : *std::max_element(m.begin(), m.end());
  if (p == 1.0) {
    double s = 0;
    for (double x : m) s += x;
    return s;
  }
  // Scale by the largest entry to keep powers in range.
  const double top = m.empty() ? 0.0 : *std::max_element(m.begin(), m.end());
  if (top == 0.0) return 0.0;
  double s = 0;
  for (double x : m) s += std::pow(x / top, p);
  return top * std::pow(s, 1.0 / p);
}

std::vector<double> moduli(const CVec& z) {
  std::vector<double> m(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) m[k] = std::abs(z[k]);
  return m;
}

double conjugate_exponent(const NormSpec& spec, bool& infinite) {
  infinite = false;
  if (spec.p_infinite) return 1.0;
  if (is_l1(spec)) {
    infinite = true;
    return 0.0;
  }
  const double p = spec.p.get_d();
  return p / (p - 1.0);
}

bool is_real(const CVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& c) { return c.imag() == 0.0; });
}

RVec to_rational(const CVec& v) {
  if (!is_real(v)) throw PreconditionError("complex vector given to a real polytope norm");
  RVec r;
  r.reserve(v.size());
  for (const auto& c : v) r.emplace_back(c.real());
  return r;
}

Complex unit_phase(const Complex& w) {
  const double a = std::abs(w);
  return a == 0.0 ? Complex{1.0, 0.0} : std::conj(w) / a;
}

}  // namespace

const char* to_string(ScalarField f) noexcept { return f == ScalarField::real ? "real" : "complex"; }

const char* to_string(NormKind k) noexcept {
  switch (k) {
    case NormKind::lp:
      return "lp";
    case NormKind::polytope_facets:
      return "polytope_facets";
    case NormKind::polytope_vertices:
      return "polytope_vertices";
  }
  return "?";
}

bool NormSpec::exact() const noexcept {
  if (field != ScalarField::real) return false;
  if (kind != NormKind::lp) return true;
  return !complex_pairs && (p_infinite || p == 1);
}

std::string NormSpec::label() const {
  std::string s = field == ScalarField::complex ? "C" : "";
  switch (kind) {
    case NormKind::lp:
      s += p_infinite ? "linf" : "l" + format_rational(p);
      if (complex_pairs) s += "-pairs";
      break;
    case NormKind::polytope_facets:
      s += "facets";
      break;
    case NormKind::polytope_vertices:
      s += "vertices";
      break;
  }
  return s;
}

NormSpec lp_norm(int dim, const std::string& p, ScalarField field) {
  NormSpec s;
  s.dim = dim;
  s.field = field;
  s.kind = NormKind::lp;
  if (p == "inf" || p == "infinity")
    s.p_infinite = true;
  else
    s.p = parse_rational(p);
  validate(s);
  return s;
}

NormSpec facet_norm(RMat functionals) {
  NormSpec s;
  s.dim = functionals.empty() ? 0 : static_cast<int>(functionals[0].size());
  s.kind = NormKind::polytope_facets;
  s.functionals = std::move(functionals);
  validate(s);
  return s;
}

NormSpec vertex_norm(RMat points) {
  NormSpec s;
  s.dim = points.empty() ? 0 : static_cast<int>(points[0].size());
  s.kind = NormKind::polytope_vertices;
  s.points = std::move(points);
  validate(s);
  return s;
}

void validate(const NormSpec& spec) {
  if (spec.dim < 1) throw PreconditionError("norm dimension must be positive");
  switch (spec.kind) {
    case NormKind::lp:
      if (!spec.p_infinite && spec.p < 1) throw PreconditionError("lp norm needs p >= 1");
      if (spec.complex_pairs && (spec.field != ScalarField::real || spec.dim % 2 != 0))
        throw PreconditionError("complex_pairs needs a real spec of even dimension");
      return;
    case NormKind::polytope_facets:
    case NormKind::polytope_vertices: {
      if (spec.field != ScalarField::real) throw PreconditionError("complex polytope norms are not supported");
      const RMat& rows = spec.kind == NormKind::polytope_facets ? spec.functionals : spec.points;
      for (const auto& r : rows) check_dim(spec, r.size());
      if (rank(rows) != static_cast<std::size_t>(spec.dim))
        throw DegenerateSpec(spec.kind == NormKind::polytope_facets ? "functionals do not span the dual space"
                                                                    : "points do not span the space");
      return;
    }
  }
}

Rational norm_exact(const NormSpec& spec, const RVec& v) {
  if (!spec.exact()) throw PreconditionError("norm " + spec.label() + " has no exact evaluation");
  check_dim(spec, v.size());
  Rational best = 0;
  switch (spec.kind) {
    case NormKind::lp:
      for (const auto& x : v) {
        if (spec.p_infinite)
          best = std::max(best, abs_value(x));
        else
          best += abs_value(x);
      }
      return best;
    case NormKind::polytope_facets:
      for (const auto& f : spec.functionals) best = std::max(best, abs_value(dot(f, v)));
      return best;
    case NormKind::polytope_vertices:
      return polytope_gauge(spec.points, v).value;
  }
  return best;
}

Rational dual_norm_exact(const NormSpec& spec, const RVec& phi) {
  if (!spec.exact()) throw PreconditionError("norm " + spec.label() + " has no exact evaluation");
  check_dim(spec, phi.size());
  Rational best = 0;
  switch (spec.kind) {
    case NormKind::lp:
      for (const auto& x : phi) {
        if (spec.p_infinite)
          best += abs_value(x);
        else
          best = std::max(best, abs_value(x));
      }
      return best;
    case NormKind::polytope_facets:
      return polytope_gauge(spec.functionals, phi).value;
    case NormKind::polytope_vertices:
      for (const auto& p : spec.points) best = std::max(best, abs_value(dot(p, phi)));
      return best;
  }
  return best;
}

RVec lmo_exact(const NormSpec& spec, const RVec& phi) {
  if (!spec.exact()) throw PreconditionError("norm " + spec.label() + " has no exact evaluation");
  check_dim(spec, phi.size());
  const std::size_t n = phi.size();
  switch (spec.kind) {
    case NormKind::lp: {
      RVec x(n, 0);
      if (spec.p_infinite) {
        for (std::size_t k = 0; k < n; ++k) x[k] = phi[k] < 0 ? -1 : 1;
        return x;
      }
      std::size_t best = 0;
      for (std::size_t k = 1; k < n; ++k)
        if (abs_value(phi[k]) > abs_value(phi[best])) best = k;
      x[best] = phi[best] < 0 ? -1 : 1;
      return x;
    }
    case NormKind::polytope_facets: {
      bool zero = std::all_of(phi.begin(), phi.end(), [](const Rational& q) { return q == 0; });
      if (zero) {
        // Any unit vector: scale e_1 onto the boundary.
        RVec e(n, 0);
        e[0] = 1;
        e[0] /= norm_exact(spec, e);
        return e;
      }
      return polytope_gauge(spec.functionals, phi).dual;
    }
    case NormKind::polytope_vertices: {
      std::size_t best = 0;
      Rational best_value = -1;
      for (std::size_t j = 0; j < spec.points.size(); ++j) {
        const Rational v = abs_value(dot(spec.points[j], phi));
        if (v > best_value) {
          best_value = v;
          best = j;
        }
      }
      RVec x = spec.points[best];
      if (dot(x, phi) < 0)
        for (auto& q : x) q = -q;
      if (best_value == 0) {
        // phi = 0: the point may be interior, so push it to the boundary.
        const Rational g = norm_exact(spec, x);
        for (auto& q : x) q /= g;
      }
      return x;
    }
  }
  return {};
}

double norm_float(const NormSpec& spec, const CVec& v) {
  check_dim(spec, v.size());
  if (spec.kind != NormKind::lp) return norm_exact(spec, to_rational(v)).get_d();
  if (spec.field == ScalarField::real && !is_real(v)) throw PreconditionError("complex vector given to a real norm");
  return lp_value(moduli(lp_coordinates(spec, v)), spec.p_infinite, spec.p_infinite ? 0.0 : spec.p.get_d());
}

double dual_norm_float(const NormSpec& spec, const CVec& phi) {
  check_dim(spec, phi.size());
  if (spec.kind != NormKind::lp) return dual_norm_exact(spec, to_rational(phi)).get_d();
  bool q_infinite = false;
  const double q = conjugate_exponent(spec, q_infinite);
  // Folded pairs pair as Re(conj(w) z); the modulus is what matters.
  return lp_value(moduli(lp_coordinates(spec, phi)), q_infinite, q);
}

CVec lmo_float(const NormSpec& spec, const CVec& phi) {
  check_dim(spec, phi.size());
  if (spec.kind != NormKind::lp) return to_complex(lmo_exact(spec, to_rational(phi)));
  // Maximize Re sum w_k z_k over the lp ball in the folded coordinates.
  CVec w = lp_coordinates(spec, phi);
  if (spec.complex_pairs)
    for (auto& c : w) c = std::conj(c);
  const auto m = moduli(w);
  std::vector<double> t(w.size(), 0.0);
  bool q_infinite = false;
  const double q = conjugate_exponent(spec, q_infinite);
  const double dual = lp_value(m, q_infinite, q);
  if (dual == 0.0) {
    t[0] = 1.0;
  } else if (spec.p_infinite) {
    std::fill(t.begin(), t.end(), 1.0);
  } else if (q_infinite) {
    t[static_cast<std::size_t>(std::max_element(m.begin(), m.end()) - m.begin())] = 1.0;
  } else {
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::pow(m[k] / dual, q - 1.0);
  }
  CVec z(w.size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = unit_phase(w[k]) * t[k];
  if (!spec.complex_pairs) {
    if (spec.field == ScalarField::real)
      for (auto& c : z) c = {c.real(), 0.0};
    return z;
  }
  CVec x(phi.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    x[2 * k] = z[k].real();
    x[2 * k + 1] = z[k].imag();
  }
  return x;
}

Scalar norm_eval(const NormSpec& spec, const RVec& v, double tau) {
  Scalar s;
  if (spec.exact()) {
    s.value = norm_exact(spec, v);
    s.approx = s.value.get_d();
    return s;
  }
  s.exact = false;
  s.approx = norm_float(spec, to_complex(v));
  s.value = s.approx;
  s.tau = tau;
  return s;
}

Scalar dual_norm_eval(const NormSpec& spec, const RVec& phi, double tau) {
  Scalar s;
  if (spec.exact()) {
    s.value = dual_norm_exact(spec, phi);
    s.approx = s.value.get_d();
    return s;
  }
  s.exact = false;
  s.approx = dual_norm_float(spec, to_complex(phi));
  s.value = s.approx;
  s.tau = tau;
  return s;
}

}  // namespace kottman
