#pragma once

#include <cstdint>

#include "orlicz/orlicz_function.hpp"

namespace orlicz::series {

/// Block sums behind the large-N series in the library. Each kernel has an
/// OpenMP variant and a serial reference used by the tests and the
/// bench_series tool. Accumulation is in long double; the parallel variants
/// combine one partial sum per thread.

/// sum over n in [n0, n1) of phi(c / (n + 2)).
double bergman_block_sum(std::int64_t n0, std::int64_t n1, double c,
                         const OrliczFunction& f);
double bergman_block_sum_serial(std::int64_t n0, std::int64_t n1, double c,
                                const OrliczFunction& f);

/// sum over n in [n0, n1) of n^(-p), n >= 1.
double zeta_block_sum(std::int64_t n0, std::int64_t n1, double p);
double zeta_block_sum_serial(std::int64_t n0, std::int64_t n1, double p);

} // namespace orlicz::series
