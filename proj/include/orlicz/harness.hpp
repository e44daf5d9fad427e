#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Outcome of a single inequality or identity check. For inequalities,
/// passed means lhs <= rhs + tolerance and slack is rhs - lhs; identities
/// require |lhs - rhs| <= tolerance.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool passed = false;
  std::string inputs_digest;
  double tolerance = 0.0;
};

/// Tr|xy| <= ||x||^o_phi ||y||_psi. Power(1) has a degenerate conjugate and
/// is routed to the trace/operator-norm endpoint check.
CheckReport check_holder(const DenseOperator& x, const DenseOperator& y,
                         const OrliczFunction& f);

/// Tr|xy| <= ||x||_p ||y||_q with 1/p + 1/q = 1, p > 1.
CheckReport check_schatten_holder(const DenseOperator& x,
                                  const DenseOperator& y, double p);

/// Tr|xy| <= ||x||_1 ||y||_inf and Tr|yx| <= ||y||_1 ||x||_inf; the report
/// carries the side with the smaller slack.
CheckReport check_s1_endpoint(const DenseOperator& x, const DenseOperator& y);

/// Tr phi(x) >= ||x||_phi when the norm exceeds 1, Tr phi(x) <= ||x||_phi
/// when it does not, and Tr phi(x / ||x||_phi) <= 1 in either case.
CheckReport check_modular_norm_bridge(const DenseOperator& x,
                                      const OrliczFunction& f);

/// |Tr phi(x / ||x||_phi) - 1| <= tolerance (doubling families).
CheckReport check_unit_modular(const DenseOperator& x, const OrliczFunction& f);

/// Tr phi(x+y) <= (k/2)[Tr phi(x) + Tr phi(y)] with the global doubling
/// constant k; rejects families without one.
CheckReport check_modular_triangle(const DenseOperator& x,
                                   const DenseOperator& y,
                                   const OrliczFunction& f);

/// ||yxz||_phi <= ||y||_inf ||x||_phi ||z||_inf plus both one-sided forms.
CheckReport check_ideal(const DenseOperator& y, const DenseOperator& x,
                        const DenseOperator& z, const OrliczFunction& f);

/// For positive x: sum phi(s_n(x)) equals the trace of the matrix function
/// phi(x) computed through the eigendecomposition.
CheckReport check_phi_maps_to_s1(const DenseOperator& x_positive,
                                 const OrliczFunction& f);

/// |Tr(xy)| <= ||y||^o_psi ||x||_phi, and near-attainment: the rank-one
/// operator built from y's top singular pair reaches ||y||_inf.
CheckReport check_duality_bound(const DenseOperator& x, const DenseOperator& y,
                                const OrliczFunction& f);

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 500;
};

/// Runs every registered check over seeded random ensembles (dimensions
/// 2-8, complex Ginibre entries) and returns one aggregated report per
/// check configuration: worst-slack trial, passed only if every trial
/// passed. Trials may execute concurrently; aggregation is ordered, so the
/// output is a deterministic function of (seed, trials).
std::vector<CheckReport> run_suite(const SuiteConfig& config);

bool all_passed(const std::vector<CheckReport>& reports);

} // namespace orlicz
