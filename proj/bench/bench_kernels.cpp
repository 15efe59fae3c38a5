// Serial reference vs OpenMP timings for the data-parallel kernels.
// Usage: bench_kernels [repeats]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kottman/arrow.hpp"
#include "kottman/auerbach.hpp"
#include "kottman/kernels.hpp"
#include "kottman/separation.hpp"

using namespace kottman;

namespace {

double best_of(int repeats, const std::function<std::string()>& f, std::string& result) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    result = f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<std::string(Execution)>& f) {
  std::string rs, rp;
  const double ts = best_of(repeats, [&] { return f(Execution::serial); }, rs);
  const double tp = best_of(repeats, [&] { return f(Execution::parallel); }, rp);
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, ts / tp, rs == rp ? "same result" : "RESULTS DIFFER");
}

std::string sweep(const SweepReport& r) { return std::to_string(r.trials) + "/" + std::to_string(r.failures); }

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d, best of %d\n\n", threads, repeats);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");

  const Budgets b;
  row("exhaustive difference sweep C_3", repeats,
      [&](Execution ex) { return sweep(exhaustive_sweep(SweepKind::difference_free, 3, b, ex)); });
  row("random difference sweep C_8 x400", repeats,
      [&](Execution ex) { return sweep(random_sweep(SweepKind::difference_free, 8, 400, b.seed, b, ex)); });
  row("random chain sweep C_7 x200", repeats,
      [&](Execution ex) { return sweep(random_sweep(SweepKind::chain, 7, 200, b.seed, b, ex)); });
  row("random gaussian sweep V_4 x200", repeats,
      [&](Execution ex) { return sweep(random_sweep(SweepKind::gaussian, 4, 200, b.seed, b, ex)); });
  row("arrow scan 3 -> 4 (2048 sets)", repeats, [&](Execution ex) {
    return std::to_string(arrow_holds(ArrowRelation::real_difference, 3, 4, ArrowMethod::exhaustive, b, ex).sets_examined);
  });
  const auto l2 = lp_norm(10, "2");
  const auto id = identity_basis(l2);
  row("unit ternary enumeration l2 N=10", repeats,
      [&](Execution ex) { return std::to_string(enumerate_unit_ternary(id, l2, b, ex).members.size()); });
  const auto l32 = lp_norm(4, "3/2");
  row("auerbach restarts l3/2 n=4", repeats, [&](Execution ex) {
    const auto basis = auerbach_basis(l32, b, ex);
    return std::to_string(basis.restart);
  });
  return 0;
}
