#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orlicz {

/// Parametric families of Orlicz functions: convex, strictly increasing on
/// [0,inf), phi(0) = 0, phi(t) -> inf.
///
///   Power(p)        phi(t) = t^p,        p >= 1
///   ScaledPower(a)  phi(t) = t^a / a,    a > 1
///   CoshMinusOne    phi(t) = cosh(t) - 1
///   PowerCoef(c,p)  phi(t) = c * t^p     (closed form of power-type
///                                         conjugates; not a CLI family)
enum class PhiFamily { Power, ScaledPower, CoshMinusOne, PowerCoef };

class OrliczFunction {
public:
  static OrliczFunction power(double p);
  static OrliczFunction scaled_power(double alpha);
  static OrliczFunction cosh_minus_one();
  static OrliczFunction power_coef(double c, double p);

  /// phi(t). Throws std::domain_error for t < 0.
  double operator()(double t) const;

  /// t with phi(t) = y, relative tolerance 1e-12. Closed form for the
  /// power families, expanding-bracket bisection otherwise.
  double inverse(double y) const;

  /// Right derivative h(t), so phi(t) = integral of h over [0, t].
  double right_derivative(double t) const;

  PhiFamily family() const { return family_; }
  /// Exponent p (power families); unused for CoshMinusOne.
  double exponent() const { return p_; }
  /// Leading coefficient (1 for Power, 1/alpha for ScaledPower).
  double coefficient() const { return coef_; }

  bool is_power_kind() const { return family_ != PhiFamily::CoshMinusOne; }

  /// True when phi(2u) <= k phi(u) holds for all u > 0 with one constant.
  bool has_global_doubling() const { return is_power_kind(); }
  /// The k above: 2^p for the power families.
  double global_doubling_constant() const;

  /// Round-trips through parse_phi_spec for the CLI families.
  std::string spec_string() const;

private:
  OrliczFunction(PhiFamily fam, double p, double coef)
      : family_(fam), p_(p), coef_(coef) {}

  PhiFamily family_;
  double p_;
  double coef_;
};

/// Doubling certificate near zero: phi(2u) <= k phi(u) for u in (0, u0].
struct Delta2Certificate {
  bool holds = false;
  double u0 = 0.0;
  double k = 0.0;
  enum class Method { analytic, grid_scan } method = Method::analytic;
};

/// Analytic certificate for the built-in families; grid_scan samples
/// phi(2u)/phi(u) on a log-spaced grid over (0, u0] and reports the sup.
Delta2Certificate delta2_check(
    const OrliczFunction& f, double u0, int grid_size,
    Delta2Certificate::Method method = Delta2Certificate::Method::analytic);

/// Young conjugate psi(u) = sup{ uv - phi(v) : v >= 0 }.
///
/// Power-type sources conjugate in closed form (PowerCoef is closed under
/// conjugation). CoshMinusOne is evaluated numerically: the stationarity
/// condition u = h(v) is solved by expanding-bracket bisection, with a
/// golden-section fallback. Power(1) conjugates to the extended-value
/// indicator of [0, 1].
class ComplementaryFunction {
public:
  enum class Mode { closed_form, numeric_legendre, indicator };

  /// psi(u). Indicator mode returns +inf for u > 1.
  double operator()(double u) const;

  /// u with psi(u) = y. Throws std::domain_error in indicator mode.
  double inverse(double y) const;

  Mode mode() const { return mode_; }
  /// The conjugate as a function family; only valid in closed_form mode.
  const OrliczFunction& closed_form() const;
  const OrliczFunction& source() const { return source_; }

private:
  friend ComplementaryFunction complementary(const OrliczFunction&);
  ComplementaryFunction(Mode mode, OrliczFunction source, OrliczFunction closed)
      : mode_(mode), source_(source), closed_(closed) {}

  Mode mode_;
  OrliczFunction source_;
  OrliczFunction closed_; // placeholder copy of source when not closed_form
};

ComplementaryFunction complementary(const OrliczFunction& f);

/// "power:p=2" | "scaled:alpha=3" | "cosh", case-insensitive. Throws
/// std::invalid_argument naming the grammar on malformed input.
OrliczFunction parse_phi_spec(std::string_view spec);

namespace detail {

/// Smallest t >= 0 with g(t) = target for nondecreasing continuous g.
/// Expands the bracket [0, 1], [0, 2], [0, 4], ... then bisects to
/// relative tolerance rel_tol (cap 200 iterations).
double solve_increasing(const std::function<double(double)>& g, double target,
                        double rel_tol = 1e-12);

/// Golden-section minimum of g over [lo, hi].
double golden_min(const std::function<double(double)>& g, double lo, double hi,
                  int iters = 200);

} // namespace detail

} // namespace orlicz
