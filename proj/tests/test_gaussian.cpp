#include <doctest.h>

#include <random>

#include "kottman/admissible.hpp"
#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"
#include "kottman/gaussian.hpp"

using namespace kottman;

namespace {
GaussianVector gv(const char* s) { return GaussianVector::parse(s); }
std::vector<GaussianVector> gvecs(std::initializer_list<const char*> m) {
  std::vector<GaussianVector> v;
  for (auto s : m) v.push_back(gv(s));
  return v;
}

// Gaussian difference checked digit by digit on complex integers.
bool brute_free(const std::vector<GaussianVector>& b, const GaussianSet& a) {
  auto value = [](int d) -> std::pair<int, int> {
    switch (d) {
      case 1: return {1, 0};
      case 2: return {-1, 0};
      case 3: return {0, 1};
      case 4: return {0, -1};
      default: return {0, 0};
    }
  };
  auto digit = [](std::pair<int, int> z) -> int {
    if (z == std::pair{0, 0}) return 0;
    if (z == std::pair{1, 0}) return 1;
    if (z == std::pair{-1, 0}) return 2;
    if (z == std::pair{0, 1}) return 3;
    if (z == std::pair{0, -1}) return 4;
    return -1;
  };
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      std::vector<int> d;
      bool in = true;
      for (int k = 0; k < a.dim() && in; ++k) {
        const auto x = value(b[i].digit(k)), y = value(b[j].digit(k));
        const int c = digit({x.first - y.first, x.second - y.second});
        in = c >= 0;
        d.push_back(c);
      }
      if (in && a.contains(GaussianVector::from_digits(d))) return false;
    }
  return true;
}
}  // namespace

TEST_CASE("delta construction") {
  const auto d1 = delta_construction(witness_difference(3));
  CHECK(d1.size() == 4);
  CHECK(d1.i_closed());
  CHECK(d1.contains(gv("i")));
  const auto d5 = delta_construction(witness_difference(5));
  CHECK(d5.size() == 24);
  CHECK(d5.admissible());
  for (const auto& x : d5.members()) CHECK((x.real_part().is_zero() || x.imag_part().is_zero()));
  CHECK_FALSE(delta_construction(witness_difference(4)).contains(gv("+i")));
  CHECK_THROWS_AS(delta_construction(witness_sum(3)), PreconditionError);
}

TEST_CASE("Gaussian finder examples") {
  const auto a1 = i_closure(gvecs({"+"}), 1);
  const auto c1 = find_gaussian_difference_free(a1);
  CHECK(c1.witness == std::vector<GaussianVector>(a1.members().begin(), a1.members().end()));
  CHECK(c1.witness.size() == 4);

  auto v1 = gvecs({"0", "+", "-", "i", "j"});
  const GaussianSet full1(1, v1);
  const auto c2 = find_gaussian_difference_free(full1);
  CHECK(c2.witness == gvecs({"+", "-", "i", "j"}));

  const auto a2 = i_closure(gvecs({"+0", "0+"}), 2);
  const auto c3 = find_gaussian_difference_free(a2);
  CHECK(c3.witness.size() == 6);
  CHECK(brute_free(c3.witness, a2));
  CHECK(c3.embedded_size == 5);
  CHECK_THROWS_AS(find_gaussian_difference_free(GaussianSet(1, gvecs({"+", "-"}))), PreconditionError);
}

TEST_CASE("Gaussian finder on every admissible set of V_1, V_2") {
  for (int n = 1; n <= 2; ++n) {
    const GaussianAdmissibleEnumerator e(n, true, 1000);
    for (std::uint64_t i = 0; i < e.count(); ++i) {
      const auto a = e.at(i);
      const auto c = find_gaussian_difference_free(a);
      REQUIRE(c.witness.size() == static_cast<std::size_t>(2 * n + 2));
      REQUIRE(brute_free(c.witness, a));
      REQUIRE(is_gaussian_free(c.witness, a));
      CHECK(max_gaussian_free_subset(a, 100).size() >= c.witness.size());
    }
  }
}

TEST_CASE("Gaussian finder on random sets of V_3") {
  const GaussianSampler s(3);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_rng(2, 3, t);
    const auto a = s.sample(rng);
    const auto c = find_gaussian_difference_free(a);
    CHECK(c.witness.size() == 8);
    CHECK(brute_free(c.witness, a));
  }
}

TEST_CASE("Gaussian and real free subsets agree through the embedding") {
  const GaussianSampler s(2);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_rng(4, 2, t);
    const auto a = s.sample(rng);
    const auto g = max_gaussian_free_subset(a, 100).size();
    CHECK(g == max_free_subset(a.embedded(), FreeMode::difference, 100).size);
  }
}
