#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "kottman/errors.hpp"
#include "kottman/separation.hpp"

using namespace kottman;

namespace {

RVec rv(std::initializer_list<const char*> xs) {
  RVec v;
  for (auto s : xs) v.push_back(parse_rational(s));
  return v;
}

std::set<RVec> as_set(const std::vector<RVec>& v) { return {v.begin(), v.end()}; }

Budgets quick() {
  Budgets b;
  b.auerbach_restarts = 8;
  return b;
}

}  // namespace

TEST_CASE("unit ternary enumeration examples") {
  const auto linf = lp_norm(2, "inf");
  const auto e = enumerate_unit_ternary(identity_basis(linf), linf);
  CHECK(e.members.size() == 8);
  CHECK(e.exact);
  const auto l1 = lp_norm(3, "1");
  const auto f = enumerate_unit_ternary(identity_basis(l1), l1);
  CHECK(f.members.size() == 6);
  for (const auto& x : f.members) CHECK(x.weight() == 1);
  const auto l2 = lp_norm(2, "2");
  const auto g = enumerate_unit_ternary(identity_basis(l2), l2);
  CHECK(g.members.size() == 4);
  CHECK_FALSE(g.exact);
  Budgets tiny;
  tiny.unit_ternary_max_dim = 2;
  CHECK_THROWS_AS(enumerate_unit_ternary(identity_basis(l1), l1, tiny), BudgetExceeded);
}

TEST_CASE("unit ternary set is closed under short differences") {
  const auto hex = facet_norm({rv({"1", "0", "0"}), rv({"0", "1", "0"}), rv({"0", "0", "1"}), rv({"1/2", "1/2", "1/2"})});
  for (const auto& spec : {lp_norm(3, "inf"), lp_norm(4, "1"), hex}) {
    const auto basis = auerbach_basis(spec);
    const auto e = enumerate_unit_ternary(basis, spec);
    const std::set<TernaryVector> members(e.members.begin(), e.members.end());
    for (const auto& a : e.members)
      for (const auto& b : e.members) {
        if (a == b) continue;
        const auto d = ternary_difference(a, b);
        if (!d) continue;
        if (norm_exact(spec, combine(basis, d->coords())) <= 1) CHECK(members.count(*d));
      }
  }
}

TEST_CASE("separated points examples") {
  const auto l1 = lp_norm(3, "1");
  const auto f = separated_points(l1);
  CHECK(f.exact);
  CHECK(f.size() == 4);
  CHECK(as_set(f.points) == as_set({rv({"1", "0", "0"}), rv({"0", "1", "0"}), rv({"0", "0", "1"}), rv({"-1", "0", "0"})}));
  CHECK(f.margin == 1);

  const auto linf = lp_norm(2, "inf");
  const auto g = separate_with_basis(SeparationMode::difference, linf, identity_basis(linf));
  CHECK(as_set(g.points) == as_set({rv({"1", "1"}), rv({"-1", "1"}), rv({"1", "-1"})}));
  CHECK(g.margin == 1);

  const auto s = plus_separated_points(lp_norm(2, "1"));
  CHECK(as_set(s.points) == as_set({rv({"1", "0"}), rv({"0", "1"})}));
  const auto t = plus_separated_points(linf);
  CHECK(t.size() == 2);
  CHECK(t.margin > 0);
}

TEST_CASE("separated family sizes and re-verification") {
  const auto hex = facet_norm({rv({"1", "0"}), rv({"0", "1"}), rv({"1", "1"})});
  const auto oct = vertex_norm({rv({"1", "0"}), rv({"0", "1"}), rv({"2/3", "2/3"}), rv({"2/3", "-2/3"})});
  for (const auto& spec : {lp_norm(2, "1"), lp_norm(4, "inf"), lp_norm(5, "1"), hex, oct}) {
    const auto d = separated_points(spec);
    CHECK(d.size() == static_cast<std::size_t>(spec.dim + 1));
    CHECK(verify_separation(d, spec).passed);
    const auto s = plus_separated_points(spec);
    CHECK(s.size() == static_cast<std::size_t>(spec.dim));
    CHECK(verify_separation(s, spec).passed);
  }
  for (const auto& spec : {lp_norm(3, "2"), lp_norm(3, "3")}) {
    const auto d = separate(SeparationMode::difference, spec, quick());
    CHECK(d.size() == 4);
    CHECK(d.fmargin >= 1e-6);
  }
}

TEST_CASE("complex separation") {
  const auto c1 = lp_norm(1, "inf", ScalarField::complex);
  const auto f = complex_separated_points(c1, quick());
  REQUIRE(f.size() == 4);
  std::vector<Complex> pts;
  for (const auto& p : f.fpoints) pts.push_back(p[0]);
  for (const Complex want : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)})
    CHECK(std::any_of(pts.begin(), pts.end(), [&](Complex z) { return std::abs(z - want) < 1e-12; }));
  CHECK(f.fmargin == doctest::Approx(std::sqrt(2.0) - 1));

  const auto c2 = complex_separated_points(lp_norm(2, "inf", ScalarField::complex), quick());
  CHECK(c2.size() == 6);
  NormSpec real4 = lp_norm(4, "inf");
  real4.complex_pairs = true;
  const auto r4 = separate(SeparationMode::difference, real4, quick());
  CHECK(r4.size() == 5);
  CHECK(verify_separation(r4, real4).passed);
}

TEST_CASE("pipeline accepts any verified basis") {
  const auto linf = lp_norm(2, "inf");
  const auto rot = basis_from_vectors(linf, std::vector<RVec>{rv({"1", "-1"}), rv({"1", "1"})});
  REQUIRE(verify_auerbach(rot, linf).passed);
  const auto f = separate_with_basis(SeparationMode::difference, linf, rot);
  CHECK(verify_separation(f, linf).passed);
  const auto half = basis_from_vectors(linf, std::vector<RVec>{rv({"1", "1/2"}), rv({"0", "1"})});
  CHECK_FALSE(verify_auerbach(half, linf).passed);
  CHECK_THROWS_AS(separate_with_basis(SeparationMode::difference, linf, half), PipelineError);
}

TEST_CASE("verify_separation rejects tampering") {
  const auto l1 = lp_norm(3, "1");
  auto f = separated_points(l1);
  f.points[1] = f.points[0];
  const auto r = verify_separation(f, l1);
  CHECK_FALSE(r.passed);
  CHECK(r.margin == -1);
  auto g = separated_points(l1);
  g.points[0][0] = 2;
  CHECK_FALSE(verify_separation(g, l1).passed);
}

TEST_CASE("pipeline errors carry the stage") {
  Budgets tiny;
  tiny.unit_ternary_max_dim = 2;
  try {
    separated_points(lp_norm(3, "1"), tiny);
    FAIL("expected an error");
  } catch (const PipelineError& e) {
    CHECK(e.stage() == "unit_ternary");
    CHECK(e.budget());
  }
  CHECK_THROWS_AS(separate(SeparationMode::complex, lp_norm(2, "1")), PipelineError);
}
