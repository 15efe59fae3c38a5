#include <doctest.h>

#include <bit>
#include <random>

#include "kottman/conflict_graph.hpp"

using namespace kottman;

namespace {

ConflictGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  ConflictGraph g(n);
  std::bernoulli_distribution edge(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

// Lexicographically least maximum independent set by scanning every subset.
std::vector<std::size_t> brute(const ConflictGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = !g.adjacent(s[i], s[j]);
    if (!ok) continue;
    if (!have || s.size() > best.size() || (s.size() == best.size() && s < best)) {
      best = s;
      have = true;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("maximum independent set agrees with brute force") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 16;
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    const auto g = random_graph(n, p, rng);
    const auto expect = brute(g);
    CHECK(maximum_independent_set(g).size() == expect.size());
    CHECK(lex_least_maximum_independent_set(g) == expect);
    const auto k = independent_set_of_size(g, expect.size());
    REQUIRE(k.has_value());
    CHECK(k->size() >= expect.size());
    CHECK_FALSE(independent_set_of_size(g, expect.size() + 1).has_value());
  }
}

TEST_CASE("independent sets across word boundaries") {
  std::mt19937_64 rng(9);
  // a perfect matching on 130 vertices: independence number 65
  ConflictGraph g(130);
  for (std::size_t i = 0; i < 130; i += 2) g.add_edge(i, i + 1);
  const auto s = maximum_independent_set(g);
  CHECK(s.size() == 65);
  const auto lex = lex_least_maximum_independent_set(g);
  REQUIRE(lex.size() == 65);
  for (std::size_t i = 0; i < 65; ++i) CHECK(lex[i] == 2 * i);
  const std::vector<std::size_t> cand{1, 3, 5, 100};
  CHECK(independent_set_of_size(g, 4, cand).has_value());
  const std::vector<std::size_t> clash{0, 1};
  CHECK_FALSE(independent_set_of_size(g, 2, clash).has_value());
  CHECK(g.degree(0) == 1);
}

TEST_CASE("empty and trivial graphs") {
  ConflictGraph g0(0);
  CHECK(maximum_independent_set(g0).empty());
  ConflictGraph g1(1);
  CHECK(maximum_independent_set(g1) == std::vector<std::size_t>{0});
  CHECK(independent_set_of_size(g1, 0).has_value());
  CHECK_FALSE(independent_set_of_size(g1, 2).has_value());
}
