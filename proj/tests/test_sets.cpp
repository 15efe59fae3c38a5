#include <doctest.h>

#include "kottman/admissible.hpp"
#include "kottman/cube_set.hpp"
#include "kottman/errors.hpp"
#include "oracle.hpp"

using namespace kottman;

namespace {
TernaryVector tv(const char* s) { return TernaryVector::parse(s); }
GaussianVector gv(const char* s) { return GaussianVector::parse(s); }
SymmetricCubeSet set_of(int dim, std::initializer_list<const char*> m) {
  std::vector<TernaryVector> v;
  for (auto s : m) v.push_back(tv(s));
  return SymmetricCubeSet(dim, v);
}
SymmetricCubeSet full(int dim) {
  std::vector<TernaryVector> v;
  for (const auto& c : oracle::cube(dim)) v.push_back(TernaryVector::from_coords(c));
  return SymmetricCubeSet(dim, v);
}
}  // namespace

TEST_CASE("flags are recomputed from members") {
  const auto a = set_of(2, {"+0", "-0", "0+", "0-"});
  CHECK(a.admissible());
  CHECK_FALSE(a.contains_zero());
  CHECK_FALSE(set_of(2, {"+0", "0+", "0-"}).symmetric());
  CHECK_FALSE(set_of(2, {"+0", "-0"}).contains_basis());
  CHECK(SymmetricCubeSet(1, {}).symmetric());
  CHECK(a.index_of(tv("0+")) == 1);
  CHECK(a.index_of(tv("++")) == SymmetricCubeSet::npos);
}

TEST_CASE("project_set") {
  CHECK(project_set(set_of(2, {"+0", "-0", "0+", "0-"}), 1) == set_of(1, {"+", "-", "0"}));
  CHECK(project_set(full(2), 1) == full(1));
  const auto a = set_of(1, {"+", "-"});
  CHECK(project_set(a, 1) == a);
  CHECK_THROWS_AS(project_set(a, 2), PreconditionError);
  const auto p = project_set(full(3), 2);
  CHECK(p.admissible());
}

TEST_CASE("extensions_of") {
  CHECK(extensions_of(tv("+"), full(2)) == std::vector<TernaryVector>{tv("++"), tv("+0"), tv("+-")});
  const auto a = set_of(2, {"+0", "-0", "0+", "0-"});
  CHECK(extensions_of(tv("+"), a) == std::vector<TernaryVector>{tv("+0")});
  CHECK(extensions_of(tv("0"), a) == std::vector<TernaryVector>{tv("0+"), tv("0-")});
  CHECK(extensions_of(tv("+"), set_of(2, {"0+", "0-"})).empty());
  CHECK_THROWS_AS(extensions_of(tv("+0"), a), PreconditionError);
}

TEST_CASE("symmetric_closure") {
  const std::vector<TernaryVector> one{tv("+")};
  CHECK(symmetric_closure(one, 1) == set_of(1, {"+", "-"}));
  const std::vector<TernaryVector> both{tv("+"), tv("-")};
  CHECK(symmetric_closure(both, 1) == set_of(1, {"+", "-"}));
  CHECK(symmetric_closure({}, 2).empty());
  const std::vector<TernaryVector> mixed{tv("+"), tv("+0")};
  CHECK_THROWS_AS(symmetric_closure(mixed, 1), PreconditionError);
}

TEST_CASE("i_closure") {
  const std::vector<GaussianVector> one{gv("+")};
  const auto c = i_closure(one, 1);
  CHECK(c.size() == 4);
  CHECK(c.i_closed());
  CHECK(c.contains(gv("i")));
  CHECK(c.contains(gv("j")));
  CHECK(c.contains(gv("-")));
  const std::vector<GaussianVector> members(c.members().begin(), c.members().end());
  CHECK(i_closure(members, 1) == c);
  CHECK(c.embedded().admissible());
}

TEST_CASE("admissible enumeration counts match brute force") {
  CHECK(admissible_count(1, true) == 2);
  CHECK(admissible_count(2, true) == 8);
  CHECK(admissible_count(3, true) == 2048);
  CHECK(admissible_count(3, false) == 1024);
  for (int n = 1; n <= 2; ++n) {
    const auto pts = oracle::cube(n);
    std::uint64_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
      oracle::Set s;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1U) s.insert(pts[i]);
      if (oracle::admissible(s, n)) ++brute;
    }
    CHECK(brute == *admissible_count(n, true));
  }
}

TEST_CASE("admissible enumeration yields distinct admissible sets") {
  for (int n = 1; n <= 3; ++n) {
    const AdmissibleEnumerator e(n, true, 1U << 20);
    std::set<std::vector<std::string>> seen;
    e.for_each([&](std::uint64_t, const SymmetricCubeSet& a) {
      REQUIRE(a.admissible());
      REQUIRE(oracle::admissible(oracle::to_set(a), n));
      std::vector<std::string> key;
      for (const auto& x : a.members()) key.push_back(x.to_string());
      seen.insert(key);
    });
    CHECK(seen.size() == e.count());
  }
  CHECK(AdmissibleEnumerator(2, true, 100).at(0) == set_of(2, {"+0", "-0", "0+", "0-"}));
  CHECK_THROWS_AS(AdmissibleEnumerator(4, true, 1U << 22), BudgetExceeded);
}

TEST_CASE("Gaussian enumeration counts") {
  CHECK(gaussian_admissible_count(1, true) == 2);
  CHECK(gaussian_admissible_count(2, true) == 32);
  const GaussianAdmissibleEnumerator e(2, true, 1000);
  std::set<std::vector<std::string>> seen;
  for (std::uint64_t i = 0; i < e.count(); ++i) {
    const auto a = e.at(i);
    REQUIRE(a.admissible());
    std::vector<std::string> key;
    for (const auto& x : a.members()) key.push_back(x.to_string());
    seen.insert(key);
  }
  CHECK(seen.size() == 32);
  CHECK_THROWS_AS(GaussianAdmissibleEnumerator(3, true, 1U << 22), BudgetExceeded);
}

TEST_CASE("samplers are deterministic and admissible") {
  const AdmissibleSampler s(6);
  auto r1 = trial_rng(7, 6, 3);
  auto r2 = trial_rng(7, 6, 3);
  const auto a = s.sample(r1);
  CHECK(a == s.sample(r2));
  CHECK(a.admissible());
  const GaussianSampler g(3);
  auto r3 = trial_rng(7, 3, 0);
  CHECK(g.sample(r3).admissible());
}

TEST_CASE("permute_set preserves admissibility") {
  const auto a = set_of(3, {"+00", "-00", "0+0", "0-0", "00+", "00-", "+-0", "-+0"});
  const std::vector<int> perm{1, 2, 0};
  const auto p = permute_set(a, perm);
  CHECK(p.admissible());
  CHECK(p.contains(tv("0+-")));
}
