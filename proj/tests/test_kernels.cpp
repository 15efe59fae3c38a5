#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "kottman/arrow.hpp"
#include "kottman/kernels.hpp"

using namespace kottman;

TEST_CASE("first_index_where: serial and parallel agree") {
  for (std::int64_t n : {0, 1, 7, 1000}) {
    auto pred = [](std::int64_t i) { return i % 37 == 36 || i == 500; };
    CHECK(first_index_where(Execution::serial, n, pred) == first_index_where(Execution::parallel, n, pred));
  }
  CHECK(first_index_where(Execution::parallel, 10, [](std::int64_t) { return false; }) == 10);
}

TEST_CASE("for_each_index visits every index and rethrows") {
  std::atomic<std::int64_t> sum{0};
  for_each_index(Execution::parallel, 100, [&](std::int64_t i) { sum += i; });
  CHECK(sum == 4950);
  CHECK_THROWS_AS(for_each_index(Execution::parallel, 50,
                                 [](std::int64_t i) {
                                   if (i == 20) throw std::runtime_error("boom");
                                 }),
                  std::runtime_error);
}

TEST_CASE("sweeps: serial and parallel agree") {
  Budgets b;
  for (auto kind : {SweepKind::difference_free, SweepKind::sum_free, SweepKind::chain}) {
    const auto s = random_sweep(kind, 5, 30, 3, b, Execution::serial);
    const auto p = random_sweep(kind, 5, 30, 3, b, Execution::parallel);
    CHECK(s.passed());
    CHECK(p.passed());
    CHECK(s.failures == p.failures);
  }
  const auto g = random_sweep(SweepKind::gaussian, 2, 20, 3, b, Execution::parallel);
  CHECK(g.passed());
  const auto e = exhaustive_sweep(SweepKind::difference_free, 3, b, Execution::parallel);
  CHECK(e.trials == 2048);
  CHECK(e.passed());
}

TEST_CASE("exhaustive arrow scans: serial and parallel agree") {
  for (int l = 2; l <= 5; ++l) {
    const auto s = arrow_holds(ArrowRelation::real_difference, 3, l, ArrowMethod::exhaustive, {}, Execution::serial);
    const auto p = arrow_holds(ArrowRelation::real_difference, 3, l, ArrowMethod::exhaustive, {}, Execution::parallel);
    CHECK(s.holds == p.holds);
    CHECK(s.sets_examined == p.sets_examined);
    CHECK(s.counterexample_index == p.counterexample_index);
  }
}
