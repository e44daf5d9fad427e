#pragma once

#include <cstdint>

#include "orlicz/operators.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// The compact self-adjoint multiplier with singular values s(n) = 1/(n+2),
/// n >= 0 (the Toeplitz operator with symbol 1 - |z|^2 on the Bergman space
/// of the unit disk, diagonal in the monomial basis). Carries integral-test
/// tail enclosures for the power families and a termwise quadratic majorant
/// for cosh - 1, plus the OpenMP block-sum kernel.
AnalyticOperator bergman_operator();

/// Upper bound on sum_{n >= N+2} phi(c s(n)), i.e. the tail left after
/// summing the terms through index N+1. For Power(p): c^p (N+3)^(1-p)/(p-1).
/// Infinite for Power(1), whose series is harmonic.
double bergman_tail_bound(std::int64_t N, double c, const OrliczFunction& f);

/// Riemann zeta by direct summation: the tail over n > N is bracketed by
/// the integrals from N+1 and from N, and the midpoint is returned once the
/// half-bracket is below eps. Refuses p <= 1 + 1e-6.
double zeta(double p, double eps);

/// (zeta(p) - 1)^(1/p), the Schatten p-norm of the operator above; p > 1.
double bergman_schatten_norm(double p);

/// sum_n phi(1 / ((n+2) candidate)) - 1; vanishes when candidate is the
/// Luxemburg norm of the operator.
double bergman_norm_equation_residual(const OrliczFunction& f,
                                      double candidate_norm);

} // namespace orlicz
