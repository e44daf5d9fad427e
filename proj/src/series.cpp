#include "orlicz/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace orlicz::series {

namespace {

// Chunked reduction: threads fill per-chunk partials, which are then
// combined in index order, so the result does not depend on the thread
// count or scheduling.
template <class Term>
double reduce_parallel(std::int64_t n0, std::int64_t n1, Term term) {
  if (n1 <= n0) return 0.0;
  constexpr std::int64_t chunk = 1 << 16;
  const std::int64_t nchunks = (n1 - n0 + chunk - 1) / chunk;
  std::vector<long double> partial(static_cast<std::size_t>(nchunks), 0.0L);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::int64_t lo = n0 + c * chunk;
    const std::int64_t hi = std::min(n1, lo + chunk);
    long double acc = 0.0L;
    for (std::int64_t n = lo; n < hi; ++n) acc += term(n);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  long double total = 0.0L;
  for (long double p : partial) total += p;
  return static_cast<double>(total);
}

template <class Term>
double reduce_serial(std::int64_t n0, std::int64_t n1, Term term) {
  long double acc = 0.0L;
  for (std::int64_t n = n0; n < n1; ++n) acc += term(n);
  return static_cast<double>(acc);
}

// t^p with fast paths for the exponents the norms hit in hot loops.
template <bool Parallel, class Arg>
double power_sum(std::int64_t n0, std::int64_t n1, double coef, double p,
                 Arg arg) {
  const auto run = [&](auto f) {
    return Parallel ? reduce_parallel(n0, n1, f) : reduce_serial(n0, n1, f);
  };
  double s = 0.0;
  if (p == 1.0)
    s = run([&](std::int64_t n) { return arg(n); });
  else if (p == 1.5)
    s = run([&](std::int64_t n) {
      const double t = arg(n);
      return t * std::sqrt(t);
    });
  else if (p == 2.0)
    s = run([&](std::int64_t n) {
      const double t = arg(n);
      return t * t;
    });
  else if (p == 2.5)
    s = run([&](std::int64_t n) {
      const double t = arg(n);
      return t * t * std::sqrt(t);
    });
  else if (p == 3.0)
    s = run([&](std::int64_t n) {
      const double t = arg(n);
      return t * t * t;
    });
  else if (p == 4.0)
    s = run([&](std::int64_t n) {
      const double t = arg(n);
      const double t2 = t * t;
      return t2 * t2;
    });
  else
    s = run([&](std::int64_t n) { return std::pow(arg(n), p); });
  return coef * s;
}

template <bool Parallel>
double bergman_sum_impl(std::int64_t n0, std::int64_t n1, double c,
                        const OrliczFunction& f) {
  const auto arg = [c](std::int64_t n) { return c / static_cast<double>(n + 2); };
  if (f.is_power_kind())
    return power_sum<Parallel>(n0, n1, f.coefficient(), f.exponent(), arg);
  // cosh(t) - 1 = 2 sinh^2(t/2), stable for the tiny tail terms.
  const auto term = [&arg](std::int64_t n) {
    const double s = std::sinh(0.5 * arg(n));
    return 2.0 * s * s;
  };
  return Parallel ? reduce_parallel(n0, n1, term) : reduce_serial(n0, n1, term);
}

} // namespace

double bergman_block_sum(std::int64_t n0, std::int64_t n1, double c,
                         const OrliczFunction& f) {
  return bergman_sum_impl<true>(n0, n1, c, f);
}

double bergman_block_sum_serial(std::int64_t n0, std::int64_t n1, double c,
                                const OrliczFunction& f) {
  return bergman_sum_impl<false>(n0, n1, c, f);
}

double zeta_block_sum(std::int64_t n0, std::int64_t n1, double p) {
  return power_sum<true>(n0, n1, 1.0, p, [](std::int64_t n) {
    return 1.0 / static_cast<double>(n);
  });
}

double zeta_block_sum_serial(std::int64_t n0, std::int64_t n1, double p) {
  return power_sum<false>(n0, n1, 1.0, p, [](std::int64_t n) {
    return 1.0 / static_cast<double>(n);
  });
}

} // namespace orlicz::series
