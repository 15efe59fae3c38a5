#include "kottman/auerbach.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "kottman/admissible.hpp"
#include "kottman/errors.hpp"

namespace kottman {
namespace {

RVec unit_vector(int n, int k) {
  RVec e(n, 0);
  e[k] = 1;
  return e;
}

std::vector<RVec> transpose_rows(const RMat& m) { return {m.begin(), m.end()}; }

// Candidate extreme points of the unit ball, or nullopt when there is no finite list.
std::optional<std::vector<RVec>> ball_vertices(const NormSpec& spec) {
  const int n = spec.dim;
  std::vector<RVec> out;
  if (spec.kind == NormKind::lp && spec.p_infinite) {
    // Sign vectors in canonical order: + before -, first coordinate most significant.
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      RVec v(n);
      for (int i = 0; i < n; ++i) v[i] = (m >> (n - 1 - i)) & 1U ? -1 : 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  if (spec.kind == NormKind::lp) {
    for (int k = 0; k < n; ++k) {
      out.push_back(unit_vector(n, k));
      RVec m = unit_vector(n, k);
      m[k] = -1;
      out.push_back(std::move(m));
    }
    return out;
  }
  if (spec.kind == NormKind::polytope_vertices) {
    for (const auto& p : spec.points) {
      if (norm_exact(spec, p) != 1) continue;
      RVec m = p;
      for (auto& q : m) q = -q;
      for (auto* v : {&p, static_cast<const RVec*>(&m)})
        if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
    }
    return out;
  }
  return std::nullopt;
}

bool within_tuple_limit(std::size_t count, int n, std::uint64_t limit) {
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(count);
  return total <= static_cast<double>(limit);
}

AuerbachBasis finish_exact(std::vector<RVec> cols, std::string method) {
  const auto inv = inverse(from_columns(cols));
  if (!inv) throw SearchFailure("Auerbach candidate is singular");
  AuerbachBasis b;
  b.exact = true;
  b.abs_det = abs_value(determinant(from_columns(cols))).get_d();
  b.vectors = std::move(cols);
  b.functionals = transpose_rows(*inv);
  b.method = std::move(method);
  return b;
}

AuerbachBasis finish_float(std::vector<CVec> cols, std::string method) {
  const auto m = from_columns(cols);
  const auto inv = inverse(m);
  if (!inv) throw SearchFailure("Auerbach candidate is singular");
  AuerbachBasis b;
  b.exact = false;
  b.abs_det = std::abs(determinant(m));
  b.fvectors = std::move(cols);
  b.ffunctionals = *inv;
  b.method = std::move(method);
  return b;
}

AuerbachBasis vertex_enumeration(const NormSpec& spec, const std::vector<RVec>& vertices) {
  const int n = spec.dim;
  const int v = static_cast<int>(vertices.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Rational best = 0;
  std::vector<int> best_idx;
  Rational best_det;
  // Increasing index tuples in lexicographic order; a permutation only flips the sign.
  for (;;) {
    std::vector<RVec> cols;
    for (int i : idx) cols.push_back(vertices[i]);
    const Rational d = determinant(from_columns(cols));
    if (abs_value(d) > best) {
      best = abs_value(d);
      best_idx = idx;
      best_det = d;
    }
    int i = n - 1;
    while (i >= 0 && idx[i] == v - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (best == 0) throw DegenerateSpec("unit ball vertices do not span the space");
  std::vector<RVec> cols;
  for (int i : best_idx) cols.push_back(vertices[i]);
  if (best_det < 0)
    for (auto& q : cols.back()) q = -q;
  return finish_exact(std::move(cols), "vertex_enumeration");
}

AuerbachBasis exact_ascent(const NormSpec& spec, const Budgets& budgets) {
  std::vector<RVec> cols = identity_basis(spec).vectors;
  for (int sweep = 0; sweep < budgets.ascent_max_sweeps; ++sweep) {
    bool improved = false;
    for (int k = 0; k < spec.dim; ++k) {
      const auto inv = inverse(from_columns(cols));
      if (!inv) throw SearchFailure("coordinate ascent reached a singular basis");
      // Replacing x_k by a maximizer of x*_k multiplies |det| by ‖x*_k‖_*.
      if (dual_norm_exact(spec, (*inv)[k]) > 1) {
        cols[k] = lmo_exact(spec, (*inv)[k]);
        improved = true;
      }
    }
    if (!improved) return finish_exact(std::move(cols), "exact_ascent");
  }
  throw SearchFailure("exact coordinate ascent did not converge within " + std::to_string(budgets.ascent_max_sweeps) +
                      " sweeps");
}

struct Candidate {
  std::vector<CVec> cols;
  double abs_det = 0.0;
  bool ok = false;
};

Candidate float_ascent_run(const NormSpec& spec, const Budgets& budgets, int restart) {
  const int n = spec.dim;
  Candidate c;
  if (restart == 0) {
    c.cols = identity_basis(spec).fvectors;
  } else {
    auto rng = trial_rng(budgets.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> g;
    for (int k = 0; k < n; ++k) {
      CVec v(n);
      for (auto& z : v) z = spec.field == ScalarField::complex ? Complex{g(rng), g(rng)} : Complex{g(rng), 0.0};
      const double s = norm_float(spec, v);
      for (auto& z : v) z /= s;
      c.cols.push_back(std::move(v));
    }
  }
  for (int sweep = 0; sweep < budgets.ascent_max_sweeps; ++sweep) {
    bool improved = false;
    for (int k = 0; k < n; ++k) {
      const auto inv = inverse(from_columns(c.cols));
      if (!inv) return c;
      if (dual_norm_float(spec, (*inv)[k]) > 1.0 + budgets.ascent_tolerance) {
        c.cols[k] = lmo_float(spec, (*inv)[k]);
        improved = true;
      }
    }
    if (!improved) {
      c.abs_det = std::abs(determinant(from_columns(c.cols)));
      c.ok = true;
      return c;
    }
  }
  return c;
}

AuerbachBasis float_ascent(const NormSpec& spec, const Budgets& budgets, Execution ex) {
  const int restarts = budgets.auerbach_restarts;
  std::vector<Candidate> runs(restarts);
  for_each_index(ex, restarts, [&](std::int64_t r) { runs[r] = float_ascent_run(spec, budgets, static_cast<int>(r)); });
  std::optional<AuerbachBasis> best;
  AuerbachReport best_report;
  for (int r = 0; r < restarts; ++r) {
    if (!runs[r].ok) continue;
    auto b = finish_float(runs[r].cols, "float_ascent");
    b.restart = r;
    const auto report = verify_auerbach(b, spec, budgets.tau);
    best_report = report;
    if (!report.passed) continue;
    // Strictly larger beyond the relative ascent tolerance; ties keep the lower restart.
    if (!best || b.abs_det > best->abs_det * (1.0 + budgets.ascent_tolerance)) best = std::move(b);
  }
  if (!best)
    throw SearchFailure("no Auerbach candidate verified after " + std::to_string(restarts) +
                        " restarts; last residuals biorthogonality " + std::to_string(best_report.biorthogonality) +
                        ", norm " + std::to_string(best_report.norm) + ", dual norm " +
                        std::to_string(best_report.dual_norm));
  return *best;
}

}  // namespace

AuerbachBasis auerbach_basis(const NormSpec& spec, const Budgets& budgets, Execution ex) {
  validate(spec);
  AuerbachBasis b;
  if (!spec.exact()) {
    b = float_ascent(spec, budgets, ex);
  } else {
    const auto vertices = ball_vertices(spec);
    if (vertices && within_tuple_limit(vertices->size(), spec.dim, budgets.vertex_tuple_limit))
      b = vertex_enumeration(spec, *vertices);
    else
      b = exact_ascent(spec, budgets);
  }
  const auto report = verify_auerbach(b, spec, budgets.tau);
  if (!report.passed)
    throw SearchFailure("Auerbach basis failed verification (biorthogonality " + std::to_string(report.biorthogonality) +
                        ", norm " + std::to_string(report.norm) + ", dual norm " + std::to_string(report.dual_norm) + ")");
  return b;
}

AuerbachBasis identity_basis(const NormSpec& spec) {
  validate(spec);
  const int n = spec.dim;
  if (spec.exact()) {
    std::vector<RVec> cols;
    for (int k = 0; k < n; ++k) {
      RVec e = unit_vector(n, k);
      const Rational s = norm_exact(spec, e);
      e[k] /= s;
      cols.push_back(std::move(e));
    }
    auto b = finish_exact(std::move(cols), "identity");
    return b;
  }
  std::vector<CVec> cols;
  for (int k = 0; k < n; ++k) {
    CVec e(n, 0.0);
    e[k] = 1.0;
    e[k] /= norm_float(spec, e);
    cols.push_back(std::move(e));
  }
  return finish_float(std::move(cols), "identity");
}

AuerbachBasis basis_from_vectors(const NormSpec& spec, const std::vector<RVec>& vectors) {
  validate(spec);
  if (vectors.size() != static_cast<std::size_t>(spec.dim)) throw PreconditionError("basis needs exactly dim vectors");
  if (!spec.exact()) {
    std::vector<CVec> cols;
    for (const auto& v : vectors) cols.push_back(to_complex(v));
    return basis_from_vectors(spec, cols);
  }
  for (const auto& v : vectors)
    if (v.size() != static_cast<std::size_t>(spec.dim)) throw PreconditionError("basis vector dimension mismatch");
  auto b = finish_exact(vectors, "supplied");
  return b;
}

AuerbachBasis basis_from_vectors(const NormSpec& spec, const std::vector<CVec>& vectors) {
  validate(spec);
  if (vectors.size() != static_cast<std::size_t>(spec.dim)) throw PreconditionError("basis needs exactly dim vectors");
  for (const auto& v : vectors)
    if (v.size() != static_cast<std::size_t>(spec.dim)) throw PreconditionError("basis vector dimension mismatch");
  return finish_float(vectors, "supplied");
}

AuerbachReport verify_auerbach(const AuerbachBasis& basis, const NormSpec& spec, double tau) {
  AuerbachReport r;
  r.exact = basis.exact;
  const std::size_t n = static_cast<std::size_t>(spec.dim);
  if (basis.exact) {
    if (!spec.exact() || basis.vectors.size() != n || basis.functionals.size() != n) return r;
    Rational bio = 0, nrm = 0, dual = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (basis.vectors[a].size() != n || basis.functionals[a].size() != n) return r;
      for (std::size_t b = 0; b < n; ++b) bio = std::max(bio, abs_value(dot(basis.functionals[a], basis.vectors[b]) - (a == b ? 1 : 0)));
      nrm = std::max(nrm, abs_value(norm_exact(spec, basis.vectors[a]) - 1));
      dual = std::max(dual, abs_value(dual_norm_exact(spec, basis.functionals[a]) - 1));
    }
    r.biorthogonality = bio.get_d();
    r.norm = nrm.get_d();
    r.dual_norm = dual.get_d();
    r.passed = bio == 0 && nrm == 0 && dual == 0;
    return r;
  }
  r.tau = tau;
  if (basis.fvectors.size() != n || basis.ffunctionals.size() != n) return r;
  for (std::size_t a = 0; a < n; ++a) {
    if (basis.fvectors[a].size() != n || basis.ffunctionals[a].size() != n) return r;
    for (std::size_t b = 0; b < n; ++b) {
      Complex s = 0;
      for (std::size_t i = 0; i < n; ++i) s += basis.ffunctionals[a][i] * basis.fvectors[b][i];
      r.biorthogonality = std::max(r.biorthogonality, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
    r.norm = std::max(r.norm, std::abs(norm_float(spec, basis.fvectors[a]) - 1.0));
    r.dual_norm = std::max(r.dual_norm, std::abs(dual_norm_float(spec, basis.ffunctionals[a]) - 1.0));
  }
  r.passed = r.biorthogonality <= tau && r.norm <= tau && r.dual_norm <= tau;
  return r;
}

RVec coefficient_map(const AuerbachBasis& basis, const RVec& x) {
  if (!basis.exact) throw PreconditionError("exact coefficient map needs an exact basis");
  RVec t;
  for (const auto& f : basis.functionals) {
    if (f.size() != x.size()) throw PreconditionError("coefficient map dimension mismatch");
    t.push_back(dot(f, x));
  }
  return t;
}

CVec coefficient_map(const AuerbachBasis& basis, const CVec& x) {
  if (basis.exact) {
    CVec t;
    for (const auto& f : basis.functionals) {
      if (f.size() != x.size()) throw PreconditionError("coefficient map dimension mismatch");
      Complex s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += f[i].get_d() * x[i];
      t.push_back(s);
    }
    return t;
  }
  CVec t;
  for (const auto& f : basis.ffunctionals) {
    if (f.size() != x.size()) throw PreconditionError("coefficient map dimension mismatch");
    Complex s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
    t.push_back(s);
  }
  return t;
}

RVec combine(const AuerbachBasis& basis, const std::vector<int>& a) {
  if (!basis.exact) throw PreconditionError("exact combination needs an exact basis");
  if (a.size() != basis.vectors.size()) throw PreconditionError("coefficient count mismatch");
  RVec z(basis.vectors.empty() ? 0 : basis.vectors[0].size(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += a[k] * basis.vectors[k][i];
  }
  return z;
}

CVec combine(const AuerbachBasis& basis, const CVec& a) {
  if (basis.exact) {
    std::vector<CVec> cols;
    for (const auto& v : basis.vectors) cols.push_back(to_complex(v));
    AuerbachBasis f;
    f.exact = false;
    f.fvectors = std::move(cols);
    return combine(f, a);
  }
  if (a.size() != basis.fvectors.size()) throw PreconditionError("coefficient count mismatch");
  CVec z(basis.fvectors.empty() ? 0 : basis.fvectors[0].size(), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += a[k] * basis.fvectors[k][i];
  return z;
}

}  // namespace kottman
