#ifndef MLHARM_SPECFUN_HPP
#define MLHARM_SPECFUN_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>

namespace mlharm {

using Complex = std::complex<double>;

// Absolute distance to a non-positive integer at which Gamma is treated as a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// Truncation controls for the Mittag-Leffler series.
///
/// The series is cut at the first index where two consecutive terms each satisfy
/// |term| <= rel_tol * |partial sum| or |term| <= abs_tol.
struct SeriesControl {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;
  std::size_t max_terms = 10000;

  void validate() const;
};

/// Parameter tuple (alpha, beta, gamma, delta, q, p) of the generalized
/// Mittag-Leffler function
///
///   E(z) = sum_{k>=0} (gamma)_{qk} z^k / (Gamma(beta + alpha k) (delta)_{pk}).
///
/// Requires Re(beta), Re(gamma), Re(delta) > 0, q, p > 0 and q <= Re(alpha) + p.
/// Re(alpha) > 0 is the regular case; Re(alpha) == 0 is accepted as a boundary
/// extension so that the Ruscheweyh reduction (alpha = 0) can be expressed.
/// Such tuples report `boundary() == true`.
class MLParams {
 public:
  MLParams(Complex alpha, Complex beta, Complex gamma, Complex delta, double q, double p);

  /// alpha = beta = gamma = delta = 1, q = p = 1: the exponential series.
  static MLParams exponential();
  /// alpha = 0, beta = gamma = delta = 1, q = p = 1.
  static MLParams ruscheweyh();

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  Complex gamma() const noexcept { return gamma_; }
  Complex delta() const noexcept { return delta_; }
  double q() const noexcept { return q_; }
  double p() const noexcept { return p_; }

  bool boundary() const noexcept { return alpha_.real() == 0.0; }

  friend bool operator==(const MLParams&, const MLParams&) = default;

 private:
  Complex alpha_, beta_, gamma_, delta_;
  double q_, p_;
};

/// Gamma function on the complex plane.
///
/// Lanczos approximation (g = 7, nine coefficients) for Re(z) >= 0.5, Euler
/// reflection below that. Positive real arguments go through std::tgamma.
/// Throws PoleError within kPoleTolerance of 0, -1, -2, ...
Complex complex_gamma(Complex z);

/// log Gamma(z). The imaginary part is determined only modulo 2*pi, so only
/// exponentiated differences of this function are meaningful.
Complex log_gamma(Complex z);

/// Extended Pochhammer symbol (gamma)_{qk} = Gamma(gamma + q k) / Gamma(gamma).
/// Returns exactly 1 for k == 0.
Complex pochhammer_ext(Complex gamma, double q, unsigned k);

struct SeriesValue {
  Complex value;
  std::size_t terms;  // number of series terms summed, including k = 0
};

SeriesValue ml_series(const MLParams& params, Complex z, const SeriesControl& ctrl = {});

inline Complex ml_eval(const MLParams& params, Complex z, const SeriesControl& ctrl = {}) {
  return ml_series(params, z, ctrl).value;
}

// Named special cases of the five-parameter function.
enum class MLVariant {
  classic,      // E_alpha
  two_param,    // E_{alpha,beta}
  prabhakar,    // E^gamma_{alpha,beta}
  salim,        // E^{gamma,delta}_{alpha,beta}
  salim_faraj,  // E^{gamma,delta,q}_{alpha,beta,p}
};

std::string_view to_string(MLVariant v) noexcept;
std::optional<MLVariant> parse_variant(std::string_view name) noexcept;

// Parameters accepted by a variant; unset fields take the identity values
// beta = 1, gamma = delta = 1, q = p = 1.
struct ReducedParams {
  Complex alpha{1.0, 0.0};
  std::optional<Complex> beta;
  std::optional<Complex> gamma;
  std::optional<Complex> delta;
  std::optional<double> q;
  std::optional<double> p;
};

/// Fills in the identity values. Throws ParameterError if a field outside the
/// variant's own parameter list is set.
MLParams complete(MLVariant variant, const ReducedParams& reduced);

inline Complex ml_variant(MLVariant variant, const ReducedParams& reduced, Complex z,
                          const SeriesControl& ctrl = {}) {
  return ml_eval(complete(variant, reduced), z, ctrl);
}

}  // namespace mlharm

#endif  // MLHARM_SPECFUN_HPP
