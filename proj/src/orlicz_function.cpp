#include "orlicz/orlicz_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// cosh(t) - 1 without cancellation near zero.
double coshm1(double t) {
  const double s = std::sinh(0.5 * t);
  return 2.0 * s * s;
}

double pow_pos(double t, double p) {
  if (t == 0.0) return 0.0;
  if (p == 1.0) return t;
  if (p == 2.0) return t * t;
  return std::pow(t, p);
}

} // namespace

OrliczFunction OrliczFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Power family requires p >= 1");
  return {PhiFamily::Power, p, 1.0};
}

OrliczFunction OrliczFunction::scaled_power(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha))
    throw std::invalid_argument("ScaledPower family requires alpha > 1");
  return {PhiFamily::ScaledPower, alpha, 1.0 / alpha};
}

OrliczFunction OrliczFunction::cosh_minus_one() {
  return {PhiFamily::CoshMinusOne, 0.0, 1.0};
}

OrliczFunction OrliczFunction::power_coef(double c, double p) {
  if (!(c > 0.0) || !(p > 1.0) || !std::isfinite(c) || !std::isfinite(p))
    throw std::invalid_argument("PowerCoef requires c > 0 and p > 1");
  return {PhiFamily::PowerCoef, p, c};
}

double OrliczFunction::operator()(double t) const {
  if (t < 0.0) throw std::domain_error("OrliczFunction: argument must be nonnegative");
  switch (family_) {
    case PhiFamily::Power:
      return pow_pos(t, p_);
    case PhiFamily::ScaledPower:
    case PhiFamily::PowerCoef:
      return coef_ * pow_pos(t, p_);
    case PhiFamily::CoshMinusOne:
      return coshm1(t);
  }
  return 0.0;
}

double OrliczFunction::inverse(double y) const {
  if (y < 0.0) throw std::domain_error("OrliczFunction::inverse: argument must be nonnegative");
  if (y == 0.0) return 0.0;
  switch (family_) {
    case PhiFamily::Power:
      return std::pow(y, 1.0 / p_);
    case PhiFamily::ScaledPower:
    case PhiFamily::PowerCoef:
      return std::pow(y / coef_, 1.0 / p_);
    case PhiFamily::CoshMinusOne:
      return detail::solve_increasing([this](double t) { return (*this)(t); }, y);
  }
  return 0.0;
}

double OrliczFunction::right_derivative(double t) const {
  if (t < 0.0) throw std::domain_error("OrliczFunction: argument must be nonnegative");
  switch (family_) {
    case PhiFamily::Power:
      return p_ * pow_pos(t, p_ - 1.0);
    case PhiFamily::ScaledPower:
      return pow_pos(t, p_ - 1.0);
    case PhiFamily::PowerCoef:
      return coef_ * p_ * pow_pos(t, p_ - 1.0);
    case PhiFamily::CoshMinusOne:
      return std::sinh(t);
  }
  return 0.0;
}

double OrliczFunction::global_doubling_constant() const {
  if (!has_global_doubling())
    throw std::domain_error("no global doubling constant for this family");
  return std::pow(2.0, p_);
}

namespace {

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

} // namespace

std::string OrliczFunction::spec_string() const {
  switch (family_) {
    case PhiFamily::Power:
      return "power:p=" + fmt_param(p_);
    case PhiFamily::ScaledPower:
      return "scaled:alpha=" + fmt_param(p_);
    case PhiFamily::CoshMinusOne:
      return "cosh";
    case PhiFamily::PowerCoef:
      return "powercoef:c=" + fmt_param(coef_) + ",p=" + fmt_param(p_);
  }
  return {};
}

Delta2Certificate delta2_check(const OrliczFunction& f, double u0, int grid_size,
                               Delta2Certificate::Method method) {
  if (!(u0 > 0.0)) throw std::invalid_argument("delta2_check: u0 must be positive");
  if (grid_size < 2) throw std::invalid_argument("delta2_check: grid_size must be >= 2");

  Delta2Certificate cert;
  cert.u0 = u0;
  cert.method = method;

  if (method == Delta2Certificate::Method::analytic) {
    if (f.is_power_kind()) {
      cert.holds = true;
      cert.k = std::pow(2.0, f.exponent());
      return cert;
    }
    // cosh: phi(2u)/phi(u) = 4 cosh^2(u/2), increasing, so the sup over
    // (0, u0] is attained at u0.
    const double ch = std::cosh(0.5 * u0);
    cert.holds = true;
    cert.k = 4.0 * ch * ch;
    return cert;
  }

  // Log-spaced scan of phi(2u)/phi(u) over (0, u0].
  double worst = 0.0;
  const double lo = std::log(u0) - std::log(1e8); // u0 * 1e-8 .. u0
  const double hi = std::log(u0);
  for (int i = 0; i < grid_size; ++i) {
    const double t = grid_size == 1 ? hi
                                    : lo + (hi - lo) * static_cast<double>(i) /
                                               static_cast<double>(grid_size - 1);
    const double u = std::exp(t);
    const double denom = f(u);
    if (denom <= 0.0) continue;
    worst = std::max(worst, f(2.0 * u) / denom);
  }
  cert.holds = std::isfinite(worst) && worst > 0.0;
  cert.k = worst;
  return cert;
}

double ComplementaryFunction::operator()(double u) const {
  if (u < 0.0) throw std::domain_error("ComplementaryFunction: argument must be nonnegative");
  switch (mode_) {
    case Mode::closed_form:
      return closed_(u);
    case Mode::indicator:
      return u <= 1.0 ? 0.0 : kInf;
    case Mode::numeric_legendre: {
      if (u == 0.0) return 0.0;
      // Maximize uv - phi(v); the maximizer solves u = h(v).
      try {
        const double v = detail::solve_increasing(
            [this](double t) { return source_.right_derivative(t); }, u);
        const double stat = u * v - source_(v);
        if (std::isfinite(stat) && stat >= 0.0) return stat;
      } catch (const std::runtime_error&) {
        // h never reaches u; fall through to the direct search.
      }
      // Golden-section fallback: expand until the objective turns down.
      double hi = 1.0;
      while (u * (2.0 * hi) - source_(2.0 * hi) > u * hi - source_(hi) &&
             hi < 1e12)
        hi *= 2.0;
      const double vbest = detail::golden_min(
          [this, u](double t) { return source_(t) - u * t; }, 0.0, 2.0 * hi);
      return std::max(0.0, u * vbest - source_(vbest));
    }
  }
  return 0.0;
}

double ComplementaryFunction::inverse(double y) const {
  if (y < 0.0) throw std::domain_error("ComplementaryFunction::inverse: argument must be nonnegative");
  if (mode_ == Mode::indicator)
    throw std::domain_error("indicator conjugate is not invertible");
  if (y == 0.0) return 0.0;
  if (mode_ == Mode::closed_form) return closed_.inverse(y);
  return detail::solve_increasing([this](double u) { return (*this)(u); }, y);
}

const OrliczFunction& ComplementaryFunction::closed_form() const {
  if (mode_ != Mode::closed_form)
    throw std::logic_error("conjugate has no closed form");
  return closed_;
}

ComplementaryFunction complementary(const OrliczFunction& f) {
  using Mode = ComplementaryFunction::Mode;
  if (f.is_power_kind()) {
    const double p = f.exponent();
    if (p == 1.0 && f.family() == PhiFamily::Power)
      return {Mode::indicator, f, f};
    // Conjugate of c t^p is c' u^q with q = p/(p-1) and
    // c' = (1 - 1/p) (c p)^(-1/(p-1)).
    const double c = f.coefficient();
    const double q = p / (p - 1.0);
    const double cprime = (1.0 - 1.0 / p) * std::pow(c * p, -1.0 / (p - 1.0));
    if (f.family() == PhiFamily::ScaledPower)
      return {Mode::closed_form, f, OrliczFunction::scaled_power(q)};
    return {Mode::closed_form, f, OrliczFunction::power_coef(cprime, q)};
  }
  return {Mode::numeric_legendre, f, f};
}

OrliczFunction parse_phi_spec(std::string_view spec) {
  std::string s(spec);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto fail = [&] {
    throw std::invalid_argument(
        "unparseable phi spec '" + std::string(spec) +
        "'; expected \"power:p=<value>\", \"scaled:alpha=<value>\" or \"cosh\"");
  };
  const auto number_after = [&](std::string_view prefix) {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) fail();
    const std::string tail = s.substr(prefix.size());
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tail, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != tail.size()) fail();
    return v;
  };

  if (s == "cosh") return OrliczFunction::cosh_minus_one();
  if (s.rfind("power:", 0) == 0) {
    const double p = number_after("power:p=");
    try {
      return OrliczFunction::power(p);
    } catch (const std::invalid_argument&) {
      fail();
    }
  }
  if (s.rfind("scaled:", 0) == 0) {
    const double a = number_after("scaled:alpha=");
    try {
      return OrliczFunction::scaled_power(a);
    } catch (const std::invalid_argument&) {
      fail();
    }
  }
  fail();
  return OrliczFunction::cosh_minus_one(); // unreachable
}

namespace detail {

double solve_increasing(const std::function<double(double)>& g, double target,
                        double rel_tol) {
  if (target <= 0.0 && g(0.0) >= target) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (g(hi) < target) {
    hi *= 2.0;
    if (++guard > 1100 || !std::isfinite(hi))
      throw std::runtime_error("solve_increasing: bracket expansion failed");
  }
  double lo = hi > 1.0 ? hi * 0.5 : 0.0;
  for (int i = 0; i < 200 && (hi - lo) > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double golden_min(const std::function<double(double)>& g, double lo, double hi,
                  int iters) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < iters && (b - a) > 1e-15 * (std::abs(b) + 1.0); ++i) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - invphi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + invphi * (b - a);
      gd = g(d);
    }
  }
  return 0.5 * (a + b);
}

} // namespace detail

} // namespace orlicz
