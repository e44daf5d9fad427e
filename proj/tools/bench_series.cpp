// Timing harness for the block-sum kernels: serial reference vs OpenMP.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "orlicz/orlicz_function.hpp"
#include "orlicz/series.hpp"

namespace {

using orlicz::OrliczFunction;
namespace series = orlicz::series;

struct Timing {
  double serial_ms;
  double parallel_ms;
  double serial_value;
  double parallel_value;
};

Timing time_pair(const std::function<double()>& serial,
                 const std::function<double()>& parallel, int reps) {
  Timing t{};
  // Warm-up, and keep the results so the sums cannot be optimized away.
  t.serial_value = serial();
  t.parallel_value = parallel();
  double best_s = 1e300, best_p = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = omp_get_wtime();
    t.serial_value = serial();
    best_s = std::min(best_s, omp_get_wtime() - t0);
    t0 = omp_get_wtime();
    t.parallel_value = parallel();
    best_p = std::min(best_p, omp_get_wtime() - t0);
  }
  t.serial_ms = best_s * 1e3;
  t.parallel_ms = best_p * 1e3;
  return t;
}

void report(const char* name, std::int64_t n, const Timing& t) {
  std::printf("%-24s N=%-10lld serial %9.2f ms   openmp %9.2f ms   speedup %5.2fx   |diff| %.3e\n",
              name, static_cast<long long>(n), t.serial_ms, t.parallel_ms,
              t.serial_ms / t.parallel_ms,
              std::abs(t.serial_value - t.parallel_value));
}

} // namespace

int main() {
  const std::int64_t n = 20'000'000;
  const int reps = 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  for (double p : {1.5, 2.0, 3.0}) {
    char name[32];
    std::snprintf(name, sizeof name, "zeta p=%.1f", p);
    const auto t = time_pair(
        [&] { return series::zeta_block_sum_serial(1, n, p); },
        [&] { return series::zeta_block_sum(1, n, p); }, reps);
    report(name, n, t);
  }

  const auto cosh1 = OrliczFunction::cosh_minus_one();
  const auto tc = time_pair(
      [&] { return series::bergman_block_sum_serial(0, n, 1.0, cosh1); },
      [&] { return series::bergman_block_sum(0, n, 1.0, cosh1); }, reps);
  report("bergman cosh", n, tc);

  const auto p15 = OrliczFunction::power(1.5);
  const auto tb = time_pair(
      [&] { return series::bergman_block_sum_serial(0, n, 1.25, p15); },
      [&] { return series::bergman_block_sum(0, n, 1.25, p15); }, reps);
  report("bergman power p=1.5", n, tb);

  return 0;
}
