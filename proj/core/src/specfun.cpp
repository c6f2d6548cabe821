#include "mlharm/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "mlharm/errors.hpp"

namespace mlharm {
namespace {

// Lanczos approximation with g = 671/128 and 14 coefficients (the set
// published in Numerical Recipes, 3rd ed.). Together with long double
// evaluation it keeps the relative error of Gamma near 3e-15 for |z| <= 50.
constexpr long double kLanczosG = 5.2421875L;
constexpr long double kLanczosC0 = 0.999999999999997092L;
constexpr std::array<long double, 14> kLanczosCoef = {
    57.1562356658629235L,     -59.5979603554754912L,    14.1360979747417471L,
    -0.491913816097620199L,   0.339946499848118887e-4L, 0.465236289270485756e-4L,
    -0.983744753048795646e-4L, 0.158088703224912494e-3L, -0.210264441724104883e-3L,
    0.217439618115212643e-3L, -0.164318106536763890e-3L, 0.844182239838527433e-4L,
    -0.261908384015814087e-4L, 0.368991826595316234e-5L,
};
constexpr long double kSqrtTwoPi = 2.506628274631000502415765284811045253L;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

void check_argument(Complex z, const char* who) {
  if (!finite(z)) throw ParameterError(std::string(who) + ": non-finite argument");
  if (z.real() > kPoleTolerance) return;
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= kPoleTolerance) {
    throw PoleError(std::string(who) + ": Gamma pole at " + describe(z));
  }
}

using WideComplex = std::complex<long double>;

constexpr long double kWidePi = 3.141592653589793238462643383279502884L;

WideComplex widen(Complex z) { return {z.real(), z.imag()}; }

Complex narrow(WideComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// log Gamma for Re(z) >= 0.5. The arithmetic runs in long double: for large
// |Im z| the imaginary part of log Gamma grows like |z| log|z|, and rounding
// in that phase would otherwise dominate the relative error of Gamma itself.
WideComplex lanczos_log(WideComplex z) {
  WideComplex series = kLanczosC0;
  for (std::size_t i = 0; i < kLanczosCoef.size(); ++i) {
    series += kLanczosCoef[i] / (z + static_cast<long double>(i + 1));
  }
  const WideComplex t = z + kLanczosG;
  return (z + 0.5L) * std::log(t) - t + std::log(kSqrtTwoPi * series / z);
}

WideComplex wide_gamma(WideComplex z) {
  if (z.real() < 0.5L) return kWidePi / (std::sin(kWidePi * z) * wide_gamma(1.0L - z));
  return std::exp(lanczos_log(z));
}

WideComplex wide_log_gamma(WideComplex z) {
  if (z.real() < 0.5L) {
    return std::log(kWidePi) - std::log(std::sin(kWidePi * z)) - wide_log_gamma(1.0L - z);
  }
  return lanczos_log(z);
}

bool positive_real(Complex z) { return z.imag() == 0.0 && z.real() > 0.0; }

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !std::isfinite(rel_tol) || !std::isfinite(abs_tol)) {
    throw ParameterError("SeriesControl: tolerances must be positive and finite");
  }
  if (max_terms < 2) throw ParameterError("SeriesControl: max_terms must be >= 2");
}

MLParams::MLParams(Complex alpha, Complex beta, Complex gamma, Complex delta, double q, double p)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta), q_(q), p_(p) {
  if (!finite(alpha) || !finite(beta) || !finite(gamma) || !finite(delta) || !std::isfinite(q) ||
      !std::isfinite(p)) {
    throw ParameterError("MLParams: non-finite parameter");
  }
  if (alpha.real() < 0.0) throw ParameterError("MLParams: Re(alpha) must be >= 0");
  if (!(beta.real() > 0.0) || !(gamma.real() > 0.0) || !(delta.real() > 0.0)) {
    throw ParameterError("MLParams: Re(beta), Re(gamma), Re(delta) must be > 0");
  }
  if (!(q > 0.0) || !(p > 0.0)) throw ParameterError("MLParams: q and p must be > 0");
  if (q > alpha.real() + p) throw ParameterError("MLParams: requires q <= Re(alpha) + p");
}

MLParams MLParams::exponential() { return MLParams(1.0, 1.0, 1.0, 1.0, 1.0, 1.0); }

MLParams MLParams::ruscheweyh() { return MLParams(0.0, 1.0, 1.0, 1.0, 1.0, 1.0); }

Complex complex_gamma(Complex z) {
  check_argument(z, "complex_gamma");
  if (positive_real(z)) return std::tgamma(z.real());
  return narrow(wide_gamma(widen(z)));
}

Complex log_gamma(Complex z) {
  check_argument(z, "log_gamma");
  if (positive_real(z)) return std::lgamma(z.real());
  return narrow(wide_log_gamma(widen(z)));
}

Complex pochhammer_ext(Complex gamma, double q, unsigned k) {
  check_argument(gamma, "pochhammer_ext");
  if (k == 0) return 1.0;
  const Complex top = gamma + q * static_cast<double>(k);
  return std::exp(log_gamma(top) - log_gamma(gamma));
}

SeriesValue ml_series(const MLParams& params, Complex z, const SeriesControl& ctrl) {
  ctrl.validate();
  if (!finite(z)) throw ParameterError("ml_eval: non-finite argument");

  const Complex a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  const double q = params.q(), p = params.p();

  Complex lg_g = log_gamma(g);
  Complex lg_b = log_gamma(b);
  Complex lg_d = log_gamma(d);

  // Neumaier-compensated summation: the leading terms of typical series are
  // O(1) and of mixed magnitude, and plain accumulation loses the last ulp.
  Complex term = std::exp(-lg_b);
  Complex sum = term;
  Complex carry = 0.0;
  auto accumulate = [&](Complex x) {
    auto part = [](double& s, double& c, double v) {
      const double t = s + v;
      c += (std::abs(s) >= std::abs(v)) ? (s - t) + v : (v - t) + s;
      s = t;
    };
    double sr = sum.real(), si = sum.imag(), cr = carry.real(), ci = carry.imag();
    part(sr, cr, x.real());
    part(si, ci, x.imag());
    sum = {sr, si};
    carry = {cr, ci};
  };
  int small_streak = 0;

  for (std::size_t k = 0; k + 1 < ctrl.max_terms; ++k) {
    const double next = static_cast<double>(k + 1);
    const Complex lg_g1 = log_gamma(g + q * next);
    const Complex lg_b1 = log_gamma(b + a * next);
    const Complex lg_d1 = log_gamma(d + p * next);
    term *= z * std::exp((lg_g1 - lg_g) - (lg_b1 - lg_b) - (lg_d1 - lg_d));
    lg_g = lg_g1;
    lg_b = lg_b1;
    lg_d = lg_d1;

    if (!finite(term)) throw NoConvergence("ml_eval: series term overflowed");
    accumulate(term);
    if (!finite(sum)) throw NoConvergence("ml_eval: partial sum overflowed");

    const double mag = std::abs(term);
    if (mag <= ctrl.rel_tol * std::abs(sum) || mag <= ctrl.abs_tol) {
      if (++small_streak == 2) return {sum + carry, k + 2};
    } else {
      small_streak = 0;
    }
  }
  throw NoConvergence("ml_eval: no convergence within max_terms");
}

std::string_view to_string(MLVariant v) noexcept {
  switch (v) {
    case MLVariant::classic: return "classic";
    case MLVariant::two_param: return "two_param";
    case MLVariant::prabhakar: return "prabhakar";
    case MLVariant::salim: return "salim";
    case MLVariant::salim_faraj: return "salim_faraj";
  }
  return "unknown";
}

std::optional<MLVariant> parse_variant(std::string_view name) noexcept {
  for (auto v : {MLVariant::classic, MLVariant::two_param, MLVariant::prabhakar, MLVariant::salim,
                 MLVariant::salim_faraj}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

MLParams complete(MLVariant variant, const ReducedParams& r) {
  const int rank = static_cast<int>(variant);
  // classic: alpha; two_param: +beta; prabhakar: +gamma; salim: +delta; salim_faraj: +q, p
  auto reject = [&](bool set, int needed, const char* name) {
    if (set && rank < needed) {
      throw ParameterError(std::string("ml_variant: '") + name + "' is not a parameter of " +
                           std::string(to_string(variant)));
    }
  };
  reject(r.beta.has_value(), 1, "beta");
  reject(r.gamma.has_value(), 2, "gamma");
  reject(r.delta.has_value(), 3, "delta");
  reject(r.q.has_value(), 4, "q");
  reject(r.p.has_value(), 4, "p");
  return MLParams(r.alpha, r.beta.value_or(1.0), r.gamma.value_or(1.0), r.delta.value_or(1.0),
                  r.q.value_or(1.0), r.p.value_or(1.0));
}

}  // namespace mlharm
