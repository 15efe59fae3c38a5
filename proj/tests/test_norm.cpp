#include <doctest.h>

#include <cmath>
#include <random>

#include "kottman/auerbach.hpp"
#include "kottman/errors.hpp"
#include "kottman/linalg.hpp"
#include "kottman/norm.hpp"
#include "kottman/simplex.hpp"
#include "numeric_oracle.hpp"

using namespace kottman;

namespace {

RVec rv(std::initializer_list<const char*> xs) {
  RVec v;
  for (auto s : xs) v.push_back(parse_rational(s));
  return v;
}

RVec random_rvec(std::mt19937_64& rng, int n, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  RVec v(n);
  for (auto& q : v) {
    q = Rational(d(rng), den(rng));
    q.canonicalize();
  }
  return v;
}

// Norms used across the tests: l1, linf, a hexagon by facets, an octagon by vertices.
NormSpec hexagon() { return facet_norm({rv({"1", "0"}), rv({"0", "1"}), rv({"1", "1"})}); }
NormSpec octagon() { return vertex_norm({rv({"1", "0"}), rv({"0", "1"}), rv({"2/3", "2/3"}), rv({"2/3", "-2/3"})}); }
NormSpec box3() { return facet_norm({rv({"1", "0", "0"}), rv({"0", "1", "0"}), rv({"0", "0", "1"}), rv({"1/2", "1/2", "1/2"})}); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("+7") == 7);
  CHECK(format_rational(Rational(4, 8)) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1-2"), PreconditionError);
  CHECK_THROWS_AS(parse_rational(""), PreconditionError);
}

TEST_CASE("simplex against basic solution enumeration") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 3, n = m + 1 + t % 4;
    RMat a(m);
    for (auto& r : a) r = random_rvec(rng, n);
    if (rank(a) < static_cast<std::size_t>(m)) continue;
    RVec b = random_rvec(rng, m);
    RVec c = random_rvec(rng, n, 0, 5);  // c >= 0 keeps the problem bounded
    const auto lp = solve_lp(a, b, c);
    const auto ref = oracle::lp_min(a, b, c);
    if (!ref) {
      CHECK(lp.status == LpStatus::infeasible);
      continue;
    }
    REQUIRE(lp.status == LpStatus::optimal);
    CHECK(lp.objective == *ref);
    for (int i = 0; i < m; ++i) CHECK(dot(a[i], lp.x) == b[i]);
    for (const auto& x : lp.x) CHECK(x >= 0);
    // Weak duality with equality certifies optimality.
    CHECK(dot(b, lp.dual) == lp.objective);
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int i = 0; i < m; ++i) s += a[i][j] * lp.dual[i];
      CHECK(s <= c[j]);
    }
  }
}

TEST_CASE("simplex status") {
  CHECK(solve_lp({rv({"1", "1"})}, rv({"-1"}), rv({"1", "1"})).status == LpStatus::infeasible);
  CHECK(solve_lp({rv({"1", "-1"})}, rv({"0"}), rv({"-1", "0"})).status == LpStatus::unbounded);
  // Redundant row.
  const auto r = solve_lp({rv({"1", "1"}), rv({"2", "2"})}, rv({"1", "2"}), rv({"1", "2"}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == 1);
}

TEST_CASE("exact linear algebra") {
  const RMat m{rv({"2", "1"}), rv({"1", "1"})};
  CHECK(determinant(m) == 1);
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((*inv)[0] == rv({"1", "-1"}));
  CHECK((*inv)[1] == rv({"-1", "2"}));
  CHECK(rank({rv({"1", "2"}), rv({"2", "4"})}) == 1);
  CHECK_FALSE(inverse({rv({"1", "2"}), rv({"2", "4"})}));
  const CMat c{{Complex(0, 1), 0}, {0, 2}};
  CHECK(std::abs(determinant(c) - Complex(0, 2)) < 1e-15);
}

TEST_CASE("norm examples") {
  const auto linf = lp_norm(3, "inf"), l1 = lp_norm(3, "1");
  CHECK(norm_exact(linf, rv({"1", "-1", "0"})) == 1);
  CHECK(norm_exact(l1, rv({"1", "-1", "0"})) == 2);
  CHECK(norm_exact(hexagon(), rv({"1", "-1"})) == 1);
  CHECK(dual_norm_exact(lp_norm(2, "inf"), rv({"1", "1"})) == 2);
  CHECK(std::abs(dual_norm_float(lp_norm(2, "2"), {3.0, 4.0}) - 5.0) < 1e-12);
  CHECK(dual_norm_exact(vertex_norm({rv({"1", "0"}), rv({"0", "1"})}), rv({"1", "-1"})) == 1);
  CHECK(norm_exact(vertex_norm({rv({"1", "0"}), rv({"0", "1"})}), rv({"1", "-1"})) == 2);
  CHECK(lp_norm(2, "2").label() == "l2");
  CHECK(lp_norm(2, "3/2").label() == "l3/2");
  CHECK(std::abs(norm_float(lp_norm(1, "inf", ScalarField::complex), {Complex(1, -1)}) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(facet_norm({rv({"1", "1"}), rv({"2", "2"})}), DegenerateSpec);
  CHECK_THROWS_AS(vertex_norm({rv({"1", "0"})}), DegenerateSpec);
  CHECK_THROWS_AS(lp_norm(2, "1/2"), PreconditionError);
  CHECK_THROWS_AS(norm_exact(lp_norm(2, "2"), rv({"1", "0"})), PreconditionError);
  CHECK_THROWS_AS(norm_exact(lp_norm(2, "1"), rv({"1"})), PreconditionError);
  NormSpec pairs = lp_norm(3, "2");
  pairs.complex_pairs = true;
  CHECK_THROWS_AS(validate(pairs), PreconditionError);
  CHECK_THROWS_AS(vertex_norm({rv({"1", "0", "0"}), rv({"0", "1", "0"})}), DegenerateSpec);
}

TEST_CASE("polytope norms agree with polar vertex enumeration") {
  std::mt19937_64 rng(11);
  for (const auto& spec : {hexagon(), octagon(), box3()}) {
    const bool facets = spec.kind == NormKind::polytope_facets;
    // Facets: ball vertices are the polar vertices of the functionals.
    // Vertices: the polar vertices are the dual ball vertices.
    const auto polar = oracle::polar_vertices(facets ? spec.functionals : spec.points);
    for (int t = 0; t < 200; ++t) {
      const RVec v = random_rvec(rng, spec.dim);
      if (facets)
        CHECK(dual_norm_exact(spec, v) == oracle::max_abs_pairing(polar, v));
      else
        CHECK(norm_exact(spec, v) == oracle::max_abs_pairing(polar, v));
      const RVec x = lmo_exact(spec, v);
      CHECK(norm_exact(spec, x) == 1);
      CHECK(dot(v, x) == dual_norm_exact(spec, v));
    }
  }
}

TEST_CASE("norm axioms on samples") {
  std::mt19937_64 rng(5);
  const double tau = 1e-9;
  std::vector<NormSpec> specs{lp_norm(3, "1"), lp_norm(3, "inf"), hexagon(), octagon(), box3(), lp_norm(3, "2"),
                              lp_norm(3, "3")};
  for (const auto& spec : specs) {
    for (int t = 0; t < 1000; ++t) {
      const RVec x = random_rvec(rng, spec.dim), y = random_rvec(rng, spec.dim);
      RVec s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      for (const char* lam : {"-2", "-1", "1/2", "3"}) {
        const Rational l = parse_rational(lam);
        RVec lx = x;
        for (auto& q : lx) q *= l;
        if (spec.exact()) {
          CHECK(norm_exact(spec, lx) == abs_value(l) * norm_exact(spec, x));
        } else {
          CHECK(std::abs(norm_float(spec, to_complex(lx)) - std::abs(l.get_d()) * norm_float(spec, to_complex(x))) <=
                4 * tau * (1 + norm_float(spec, to_complex(lx))));
        }
      }
      if (spec.exact())
        CHECK(norm_exact(spec, s) <= norm_exact(spec, x) + norm_exact(spec, y));
      else
        CHECK(norm_float(spec, to_complex(s)) <= norm_float(spec, to_complex(x)) + norm_float(spec, to_complex(y)) + 4 * tau);
    }
  }
}

TEST_CASE("float lmo attains the dual norm") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  NormSpec pairs = lp_norm(4, "3");
  pairs.complex_pairs = true;
  for (const auto& spec : {lp_norm(3, "2"), lp_norm(3, "3"), lp_norm(3, "inf", ScalarField::complex),
                           lp_norm(3, "1", ScalarField::complex), lp_norm(2, "5/2", ScalarField::complex), pairs}) {
    for (int t = 0; t < 100; ++t) {
      CVec phi(spec.dim);
      for (auto& z : phi) z = spec.field == ScalarField::complex ? Complex(g(rng), g(rng)) : Complex(g(rng), 0);
      const CVec x = lmo_float(spec, phi);
      Complex s = 0;
      for (int i = 0; i < spec.dim; ++i) s += phi[i] * x[i];
      CHECK(std::abs(norm_float(spec, x) - 1.0) < 1e-12);
      CHECK(std::abs(s.real() - dual_norm_float(spec, phi)) < 1e-9);
    }
  }
}

TEST_CASE("auerbach examples") {
  const auto linf = lp_norm(2, "inf");
  const auto b = auerbach_basis(linf);
  CHECK(b.method == "vertex_enumeration");
  REQUIRE(b.vectors.size() == 2);
  CHECK(b.vectors[0] == rv({"1", "1"}));
  CHECK(b.vectors[1] == rv({"-1", "1"}));
  CHECK(b.functionals[0] == rv({"1/2", "1/2"}));
  CHECK(b.functionals[1] == rv({"-1/2", "1/2"}));
  CHECK(b.abs_det == 2.0);
  const auto r = verify_auerbach(b, linf);
  CHECK(r.passed);
  CHECK(r.biorthogonality == 0.0);

  const auto l1 = lp_norm(3, "1");
  const auto c = auerbach_basis(l1);
  CHECK(c.vectors == std::vector<RVec>{rv({"1", "0", "0"}), rv({"0", "1", "0"}), rv({"0", "0", "1"})});
  CHECK(c.abs_det == 1.0);

  for (const char* p : {"1", "3/2", "2", "3", "inf"})
    for (int n = 1; n <= 4; ++n) {
      const auto spec = lp_norm(n, p);
      const auto id = verify_auerbach(identity_basis(spec), spec);
      CHECK(id.passed);
      CHECK(id.biorthogonality == 0.0);
      CHECK(id.norm == 0.0);
      CHECK(id.dual_norm == 0.0);
    }

  auto scaled = identity_basis(lp_norm(2, "2"));
  scaled.fvectors[0][0] = 2.0;
  const auto bad = verify_auerbach(scaled, lp_norm(2, "2"));
  CHECK_FALSE(bad.passed);
  CHECK(bad.norm == doctest::Approx(1.0));
}

TEST_CASE("auerbach on polytopes and smooth norms") {
  Budgets small;
  small.auerbach_restarts = 8;
  for (const auto& spec : {hexagon(), octagon(), box3(), lp_norm(5, "inf"), lp_norm(6, "1")}) {
    const auto b = auerbach_basis(spec, small);
    CHECK(b.exact);
    CHECK(verify_auerbach(b, spec).passed);
  }
  CHECK(auerbach_basis(lp_norm(5, "inf")).method == "exact_ascent");
  CHECK(auerbach_basis(hexagon()).method == "exact_ascent");
  CHECK(auerbach_basis(octagon()).method == "vertex_enumeration");
  for (const auto& spec : {lp_norm(3, "2"), lp_norm(3, "3"), lp_norm(2, "inf", ScalarField::complex),
                           lp_norm(3, "3/2", ScalarField::complex)}) {
    const auto b = auerbach_basis(spec, small);
    CHECK_FALSE(b.exact);
    const auto r = verify_auerbach(b, spec);
    CHECK(r.passed);
    CHECK(r.biorthogonality <= 1e-9);
    CHECK(b.abs_det >= 1.0 - 1e-12);
  }
  // Euclidean: the identity is already optimal and restart 0 keeps it.
  CHECK(auerbach_basis(lp_norm(3, "2"), small).restart == 0);
  // Complex linf in C^2: the optimum |det| is 2, not the identity's 1.
  CHECK(auerbach_basis(lp_norm(2, "inf", ScalarField::complex), small).abs_det == doctest::Approx(2.0));
}

TEST_CASE("auerbach restarts are deterministic across execution modes") {
  Budgets b;
  b.auerbach_restarts = 6;
  const auto spec = lp_norm(3, "3");
  const auto s = auerbach_basis(spec, b, Execution::serial);
  const auto p = auerbach_basis(spec, b, Execution::parallel);
  CHECK(s.restart == p.restart);
  CHECK(s.fvectors == p.fvectors);
}

TEST_CASE("coefficient map") {
  const auto spec = lp_norm(2, "inf");
  const auto b = auerbach_basis(spec);
  CHECK(coefficient_map(b, b.vectors[0]) == rv({"1", "0"}));
  RVec d(2);
  for (int i = 0; i < 2; ++i) d[i] = b.vectors[0][i] - b.vectors[1][i];
  CHECK(coefficient_map(b, d) == rv({"1", "-1"}));
  std::mt19937_64 rng(2);
  for (const auto& sp : {spec, lp_norm(3, "1"), hexagon(), octagon(), box3()}) {
    const auto basis = auerbach_basis(sp);
    for (int t = 0; t < 1000; ++t) {
      const RVec x = random_rvec(rng, sp.dim);
      Rational sup = 0;
      for (const auto& q : coefficient_map(basis, x)) sup = std::max(sup, abs_value(q));
      CHECK(sup <= norm_exact(sp, x));
    }
  }
  const auto f = auerbach_basis(lp_norm(3, "3"));
  for (int t = 0; t < 1000; ++t) {
    const CVec x = to_complex(random_rvec(rng, 3));
    double sup = 0;
    for (const auto& q : coefficient_map(f, x)) sup = std::max(sup, std::abs(q));
    CHECK(sup <= norm_float(lp_norm(3, "3"), x) + 1e-9);
  }
}
