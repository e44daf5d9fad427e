#include "orlicz/bergman.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/norms.hpp"
#include "orlicz/series.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Enclosure of sum_{n >= start} phi(c / (n+2)). With m = n + 2 the sum is
// over m >= start + 2, and the integral test gives
//   int_{start+2}^inf f(m) dm  <=  sum  <=  int_{start+1}^inf f(m) dm
// for decreasing f.
double power_tail(std::int64_t start, double c, double coef, double p,
                  bool upper) {
  if (c == 0.0 || coef == 0.0) return 0.0;
  if (p <= 1.0) return kInf;
  const double from = static_cast<double>(start) + (upper ? 1.0 : 2.0);
  return coef * std::pow(c, p) * std::pow(from, 1.0 - p) / (p - 1.0);
}

// cosh(t)-1 <= (t^2/2) cosh(t0) for t <= t0, and cosh(t)-1 >= t^2/2; the
// largest remaining argument is c s(start) = c/(start+2).
double cosh_tail(std::int64_t start, double c, bool upper) {
  if (c == 0.0) return 0.0;
  const double quad = power_tail(start, c, 0.5, 2.0, upper);
  if (!upper) return quad;
  const double t0 = c / static_cast<double>(start + 2);
  return quad * std::cosh(t0);
}

double tail_from(std::int64_t start, double c, const OrliczFunction& f,
                 bool upper) {
  if (f.is_power_kind())
    return power_tail(start, c, f.coefficient(), f.exponent(), upper);
  return cosh_tail(start, c, upper);
}

} // namespace

AnalyticOperator bergman_operator() {
  AnalyticOperator op;
  op.s = [](std::int64_t n) { return 1.0 / static_cast<double>(n + 2); };
  op.tail_upper = [](std::int64_t start, double c, const OrliczFunction& f) {
    return tail_from(start, c, f, true);
  };
  op.tail_lower = [](std::int64_t start, double c, const OrliczFunction& f) {
    return tail_from(start, c, f, false);
  };
  op.block_sum = [](std::int64_t n0, std::int64_t n1, double c,
                    const OrliczFunction& f) {
    return series::bergman_block_sum(n0, n1, c, f);
  };
  op.name = "bergman";
  return op;
}

double bergman_tail_bound(std::int64_t N, double c, const OrliczFunction& f) {
  if (N < 0) throw std::invalid_argument("bergman_tail_bound: N must be nonnegative");
  return tail_from(N + 2, c, f, true);
}

namespace {

// zeta(p) - 1 = sum_{n >= 2} n^-p, summed without the cancellation that
// the "+1" would cost at large p.
double zeta_minus_one(double p, double eps) {
  if (!(p > 1.0 + 1e-6))
    throw std::invalid_argument("zeta: p too close to 1, series near-divergent");
  if (!(eps > 0.0)) throw std::invalid_argument("zeta: eps must be positive");

  const auto lower_int = [p](double from) {
    return std::pow(from, 1.0 - p) / (p - 1.0);
  };
  // Half-bracket [int_N - int_{N+1}] / 2 <= N^-p / 2.
  const double nd = std::pow(0.5 / eps, 1.0 / p);
  if (nd > 4e9)
    throw std::invalid_argument(
        "zeta: requested tolerance needs too many terms at this exponent");
  std::int64_t n = static_cast<std::int64_t>(nd) + 1;
  if (n < 8) n = 8;
  double half = 0.5 * (lower_int(static_cast<double>(n)) -
                       lower_int(static_cast<double>(n + 1)));
  while (half > eps) {
    n *= 2;
    half = 0.5 * (lower_int(static_cast<double>(n)) -
                  lower_int(static_cast<double>(n + 1)));
  }
  const double partial = series::zeta_block_sum(2, n + 1, p);
  const double mid = 0.5 * (lower_int(static_cast<double>(n)) +
                            lower_int(static_cast<double>(n + 1)));
  return partial + mid;
}

} // namespace

double zeta(double p, double eps) { return 1.0 + zeta_minus_one(p, eps); }

double bergman_schatten_norm(double p) {
  if (!(p > 1.0))
    throw std::invalid_argument(
        "bergman_schatten_norm: requires p > 1 (the operator is not trace class)");
  return std::pow(zeta_minus_one(p, 1e-12), 1.0 / p);
}

double bergman_norm_equation_residual(const OrliczFunction& f,
                                      double candidate_norm) {
  if (!(candidate_norm > 0.0))
    throw std::invalid_argument("candidate norm must be positive");
  const CompactOperator op = bergman_operator();
  return modular(op, f, 1.0 / candidate_norm, 1e-11).estimate() - 1.0;
}

} // namespace orlicz
