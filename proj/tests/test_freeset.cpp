#include <doctest.h>

#include <random>

#include "kottman/admissible.hpp"
#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"
#include "oracle.hpp"

using namespace kottman;

namespace {
TernaryVector tv(const char* s) { return TernaryVector::parse(s); }
std::vector<TernaryVector> vecs(std::initializer_list<const char*> m) {
  std::vector<TernaryVector> v;
  for (auto s : m) v.push_back(tv(s));
  return v;
}
SymmetricCubeSet set_of(int dim, std::initializer_list<const char*> m) { return SymmetricCubeSet(dim, vecs(m)); }
SymmetricCubeSet full(int dim, bool zero = true) {
  std::vector<TernaryVector> v;
  for (const auto& c : oracle::cube(dim)) {
    auto x = TernaryVector::from_coords(c);
    if (zero || !x.is_zero()) v.push_back(x);
  }
  return SymmetricCubeSet(dim, v);
}
std::vector<oracle::Vec> plain(const std::vector<TernaryVector>& v) {
  std::vector<oracle::Vec> out;
  for (const auto& x : v) out.push_back(x.coords());
  return out;
}
}  // namespace

TEST_CASE("is_free examples") {
  CHECK(is_free(vecs({"+", "-"}), set_of(1, {"+", "-"}), FreeMode::difference));
  CHECK_FALSE(is_free(vecs({"+0", "0+"}), set_of(2, {"+0", "-0", "0+", "0-", "+-", "-+"}), FreeMode::difference));
  CHECK(is_free(vecs({"+0", "0+"}), set_of(2, {"+0", "-0", "0+", "0-", "00"}), FreeMode::sum));
  CHECK_THROWS_AS(is_free(vecs({"++"}), set_of(2, {"+0", "-0", "0+", "0-"}), FreeMode::sum), PreconditionError);
  // sum of distinct elements only: {+, -} in {+-, 0} has 1 + (-1) = 0 in A
  CHECK_FALSE(is_free(vecs({"+", "-"}), set_of(1, {"+", "-", "0"}), FreeMode::sum));
}

TEST_CASE("max_free_subset examples") {
  const auto w5 = witness_difference(5);
  CHECK(max_free_subset(w5, FreeMode::difference).size == 4);
  CHECK(max_free_subset(set_of(2, {"+0", "-0", "0+", "0-", "00"}), FreeMode::sum).size == 2);
  const auto r = max_free_subset(set_of(1, {"+", "-"}), FreeMode::difference);
  CHECK(r.size == 2);
  CHECK(r.witness == vecs({"+", "-"}));
  CHECK_THROWS_AS(max_free_subset(full(4), FreeMode::difference, 64), BudgetExceeded);
}

TEST_CASE("max_free_subset matches brute force and is lexicographically least") {
  for (const bool sum : {false, true}) {
    const FreeMode mode = sum ? FreeMode::sum : FreeMode::difference;
    const AdmissibleEnumerator e(2, true, 100);
    e.for_each([&](std::uint64_t, const SymmetricCubeSet& a) {
      const auto r = max_free_subset(a, mode);
      const auto s = oracle::to_set(a);
      REQUIRE(r.size == oracle::max_free(s, sum));
      REQUIRE(oracle::is_free(plain(r.witness), s, sum));
      // lexicographically least among maximum free subsets (canonical member order)
      std::vector<std::size_t> best;
      const auto n = a.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != r.size) continue;
        std::vector<oracle::Vec> b;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1U) {
            b.push_back(a[i].coords());
            idx.push_back(i);
          }
        if (oracle::is_free(b, s, sum) && (best.empty() || idx < best)) best = idx;
      }
      std::vector<TernaryVector> expect;
      for (auto i : best) expect.push_back(a[i]);
      CHECK(r.witness == expect);
    });
  }
  std::mt19937_64 rng(5);
  const AdmissibleSampler sampler(3);
  for (int t = 0; t < 40; ++t) {
    const auto a = sampler.sample(rng);
    const auto s = oracle::to_set(a);
    CHECK(max_free_subset(a, FreeMode::difference).size == oracle::max_free(s, false));
    CHECK(max_free_subset(a, FreeMode::sum).size == oracle::max_free(s, true));
  }
}

TEST_CASE("tightness of the witness sets") {
  for (int l = 3; l <= 8; ++l) {
    const auto a = witness_difference(l);
    CHECK(a.admissible());
    CHECK(a.size() == static_cast<std::size_t>(2 * (l - 2) + (l - 2) * (l - 3)));
    CHECK(max_free_subset(a, FreeMode::difference).size == static_cast<std::size_t>(l - 1));
    if (l <= 6) CHECK(oracle::max_free(oracle::to_set(a), false) == static_cast<std::size_t>(l - 1));
  }
  for (int l = 2; l <= 8; ++l) {
    const auto a = witness_sum(l);
    CHECK(a.admissible());
    CHECK(a.contains_zero());
    CHECK(max_free_subset(a, FreeMode::sum).size == static_cast<std::size_t>(l - 1));
    CHECK(oracle::max_free(oracle::to_set(a), true) == static_cast<std::size_t>(l - 1));
  }
  CHECK(witness_difference(3) == set_of(1, {"+", "-"}));
  CHECK(witness_difference(4) == set_of(2, {"+0", "-0", "0+", "0-", "+-", "-+"}));
  CHECK(witness_sum(2) == set_of(1, {"+", "-", "0"}));
  CHECK_THROWS_AS(witness_difference(2), PreconditionError);
  CHECK_THROWS_AS(witness_sum(1), PreconditionError);
}

TEST_CASE("extension step examples") {
  const auto b = vecs({"+", "-"});
  CHECK(extend_difference_free(full(2), b).witness == vecs({"++", "+-", "-+"}));
  const auto a = set_of(2, {"+0", "-0", "0+", "0-"});
  CHECK(extend_difference_free(a, b).witness == vecs({"+0", "0+", "-0"}));
  CHECK_THROWS_AS(extend_difference_free(a, vecs({"+", "-", "0"})), PreconditionError);
  CHECK_THROWS_AS(extend_difference_free(set_of(2, {"+0", "-0"}), b), PreconditionError);
}

TEST_CASE("extension step picks the least tuple, then the least z") {
  // brute force over all (tuple, z) in the spec's search order
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n) {
    const AdmissibleSampler sampler(n);
    for (int t = 0; t < 30; ++t) {
      const auto a = sampler.sample(rng);
      const auto pr = project_set(a, n - 1);
      const auto base = find_difference_free(pr).witness;
      const auto got = extend_difference_free(a, base, true);
      std::vector<std::vector<TernaryVector>> ext;
      for (const auto& x : base) ext.push_back(extensions_of(x, a));
      std::vector<std::size_t> pick(base.size(), 0);
      std::optional<std::vector<TernaryVector>> expect;
      const auto s = oracle::to_set(a);
      for (bool more = true; more && !expect;) {
        std::vector<TernaryVector> choice;
        for (std::size_t i = 0; i < base.size(); ++i) choice.push_back(ext[i][pick[i]]);
        for (const auto& z : a.members()) {
          auto cand = choice;
          cand.push_back(z);
          std::sort(cand.begin(), cand.end());
          if (std::adjacent_find(cand.begin(), cand.end()) != cand.end()) continue;
          if (oracle::is_free(plain(cand), s, false)) {
            expect = cand;
            break;
          }
        }
        // odometer over extension indices, first element most significant
        more = false;
        for (std::size_t i = base.size(); i-- > 0;) {
          if (++pick[i] < ext[i].size()) {
            more = true;
            break;
          }
          pick[i] = 0;
        }
      }
      REQUIRE(expect.has_value());
      CHECK(got.witness == *expect);
    }
  }
}

TEST_CASE("chains") {
  const auto c2 = chain_difference_free(full(2));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].witness == vecs({"+", "-"}));
  CHECK(c2[1].witness.size() == 3);
  const auto c1 = chain_difference_free(set_of(1, {"+", "-"}));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].witness == vecs({"+", "-"}));
  const auto a = full(3);
  const auto c3 = chain_difference_free(a, true);
  REQUIRE(c3.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(c3[k].witness.size() == k + 2);
    CHECK(is_free(c3[k].witness, project_set(a, static_cast<int>(k) + 1), FreeMode::difference));
  }
}

TEST_CASE("finders on the examples") {
  const auto d1 = find_difference_free(set_of(1, {"+", "-"}));
  CHECK(d1.witness == vecs({"+", "-"}));
  const auto d2 = find_difference_free(full(2, false));
  CHECK(d2.witness.size() == 3);
  CHECK(d2.checked);
  const auto a3 = set_of(3, {"+00", "-00", "0+0", "0-0", "00+", "00-"});
  const auto d3 = find_difference_free(a3);
  CHECK(d3.witness.size() == 4);
  CHECK(is_free(vecs({"+00", "0+0", "00+", "-00"}), a3, FreeMode::difference));

  const auto s2 = find_sum_free(set_of(2, {"+0", "-0", "0+", "0-", "00"}));
  CHECK(s2.witness == vecs({"+0", "0+"}));
  CHECK(s2.non_distinct_sum_free);
  CHECK(find_sum_free(set_of(1, {"+", "-"})).witness == vecs({"+"}));
  const auto s3 = find_sum_free(full(3, false));
  CHECK(s3.witness.size() == 3);
  CHECK(is_free(s3.witness, full(3, false), FreeMode::sum));
  CHECK_THROWS_AS(find_difference_free(set_of(2, {"+0", "0+"})), PreconditionError);
}

TEST_CASE("finders on every admissible set of C_1..C_3, checked by the oracle") {
  for (int n = 1; n <= 3; ++n) {
    const AdmissibleEnumerator e(n, true, 1U << 20);
    e.for_each([&](std::uint64_t, const SymmetricCubeSet& a) {
      const auto s = oracle::to_set(a);
      const auto d = find_difference_free(a);
      REQUIRE(d.witness.size() == static_cast<std::size_t>(n + 1));
      REQUIRE(oracle::is_free(plain(d.witness), s, false));
      const auto f = find_sum_free(a);
      REQUIRE(f.witness.size() == static_cast<std::size_t>(n));
      REQUIRE(oracle::is_free(plain(f.witness), s, true));
      if (a.size() <= 20) REQUIRE(max_free_subset(a, FreeMode::difference).size >= d.witness.size());
    });
  }
}

TEST_CASE("permutation equivariance") {
  std::mt19937_64 rng(3);
  const AdmissibleSampler sampler(5);
  std::vector<int> perm{0, 1, 2, 3, 4};
  for (int t = 0; t < 40; ++t) {
    const auto a = sampler.sample(rng);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto pa = permute_set(a, perm);
    const auto w = find_difference_free(a).witness;
    const auto pw = find_difference_free(pa).witness;
    CHECK(is_free(pw, pa, FreeMode::difference));
    std::vector<TernaryVector> image;
    for (const auto& x : w) image.push_back(permute(x, perm));
    CHECK(is_free(image, pa, FreeMode::difference));
    const auto sw = find_sum_free(pa).witness;
    CHECK(sw.size() == 5);
    CHECK(is_free(sw, pa, FreeMode::sum));
  }
}

TEST_CASE("extension soundness on random sets") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 9; ++n) {
    const AdmissibleSampler sampler(n + 1);
    for (int t = 0; t < 5; ++t) {
      const auto a = sampler.sample(rng);
      const auto pr = project_set(a, n);
      const auto b = find_difference_free(pr).witness;
      const auto c = extend_difference_free(a, b, true);
      CHECK(c.witness.size() == b.size() + 1);
      CHECK(is_free(c.witness, a, FreeMode::difference));
    }
  }
}

TEST_CASE("grid condition") {
  const std::vector<GridPoint> cyc{{1, 2}, {2, 3}, {3, 1}};
  CHECK(grid_star_check(cyc, 3));
  const std::vector<GridPoint> same_first{{1, 2}, {1, 3}};
  CHECK_FALSE(grid_star_check(same_first, 3));
  const std::vector<GridPoint> disjoint{{1, 2}, {3, 4}};
  CHECK(grid_star_check(disjoint, 4));
  const std::vector<GridPoint> diag{{1, 1}};
  CHECK_THROWS_AS(grid_star_check(diag, 3), PreconditionError);
  const std::vector<GridPoint> out{{1, 5}};
  CHECK_THROWS_AS(grid_star_check(out, 3), PreconditionError);
}

TEST_CASE("grid maxima") {
  const auto r2 = grid_max_properties(2);
  CHECK(r2.max_size == 2);
  CHECK(r2.witness == std::vector<GridPoint>{{1, 2}, {2, 1}});
  const auto r3 = grid_max_properties(3);
  CHECK(r3.max_size == 3);
  CHECK(r3.witness == std::vector<GridPoint>{{1, 2}, {2, 3}, {3, 1}});
  for (int n = 2; n <= 5; ++n) {
    const auto r = grid_max_properties(n);
    CHECK(r.max_size == static_cast<std::size_t>(n));
    CHECK(r.bound_holds);
    CHECK(r.coverage_holds);
    CHECK(r.full_sets > 0);
    CHECK(grid_star_check(r.witness, n));
  }
  CHECK_THROWS_AS(grid_max_properties(6), BudgetExceeded);
}
