#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "orlicz/operators.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Tr phi(lambda x) = sum phi(lambda s_n(|x|)), with truncation metadata.
/// The exact modular lies in [value, value + tail_bound].
struct ModularValue {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;

  /// Midpoint of the enclosure; error at most tail_bound / 2.
  double estimate() const { return value + 0.5 * tail_bound; }
};

/// Truncation cap exceeded before the tail enclosure reached eps_tail.
class TruncationError : public std::runtime_error {
public:
  TruncationError(std::string what, ModularValue partial)
      : std::runtime_error(std::move(what)), partial_(partial) {}
  const ModularValue& partial() const { return partial_; }

private:
  ModularValue partial_;
};

enum class NormMethod { bisection, k_equation, golden_section, closed_form };
std::string to_string(NormMethod m);

struct NormResult {
  double value = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
  NormMethod method = NormMethod::closed_form;
};

ModularValue modular(const CompactOperator& op, const OrliczFunction& f,
                     double lambda, double eps_tail = 1e-11);

/// Luxemburg norm inf{ lambda > 0 : Tr phi(x / lambda) <= 1 }, by bisection
/// on the nonincreasing map lambda -> Tr phi(x / lambda). The lower bracket
/// s_1 / phi^{-1}(1) already makes the top term reach 1; the upper bracket
/// doubles until the modular drops below 1.
NormResult luxemburg_norm(const CompactOperator& op, const OrliczFunction& f,
                          double rel_tol = 1e-10);
NormResult luxemburg_norm(const CompactOperator& op,
                          const ComplementaryFunction& psi,
                          double rel_tol = 1e-10);

/// Orlicz norm via the Amemiya form inf_{k>0} (1 + Tr phi(k x)) / k.
/// Finite spectra are solved through the stationarity condition
/// sum psi(h(k s_n)) = 1 (bisection in k); analytic spectra and conjugates
/// without usable derivatives fall back to golden section on log k, and the
/// result records which method produced it.
NormResult amemiya_norm(const CompactOperator& op, const OrliczFunction& f,
                        double rel_tol = 1e-10);
NormResult amemiya_norm(const CompactOperator& op,
                        const ComplementaryFunction& psi,
                        double rel_tol = 1e-10);

/// Brute-force sup{ sum s_n y_n : sum psi(y_n) <= 1, y_n >= 0 } for spectra
/// with at most 6 nonzero entries. Ground truth for amemiya_norm: the budget
/// split over coordinates is optimized directly (concave objective on the
/// simplex via psi^{-1}), from several deterministic and random starts.
double orlicz_norm_sup_oracle(const DiagonalOperator& op,
                              const OrliczFunction& f, int grid = 200);

/// 1 / phi^{-1}(1).
double rank_one_luxemburg(const OrliczFunction& f);

/// psi^{-1}(1/mu) * mu; throws for Power(1), whose conjugate is not
/// invertible.
double rank_one_orlicz(const OrliczFunction& f, int mu);

enum class MembershipRationale { finite_rank, delta2_collapse, tail_comparison };
std::string to_string(MembershipRationale r);

struct MembershipVerdict {
  bool in_S_phi = false;
  bool in_E_phi = false;
  std::optional<double> witness_lambda;
  MembershipRationale rationale = MembershipRationale::finite_rank;
};

/// Finite-rank operators always lie in both spaces. Analytic operators are
/// probed at lambda = 2^j: a finite tail upper bound witnesses S_phi (and
/// all of E_phi under a doubling certificate). Exclusion is reported when
/// no probe converges; for operators carrying a tail lower bound the
/// divergence of that integral bound certifies the verdict.
MembershipVerdict classify_membership(const CompactOperator& op,
                                      const OrliczFunction& f);

} // namespace orlicz
