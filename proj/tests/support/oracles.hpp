// Independent reference implementations used only by the tests. They share no
// code with the library and favour obviously-correct algorithms over speed.
#ifndef MLHARM_TESTS_ORACLES_HPP
#define MLHARM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

// log Gamma via upward recurrence to Re(z) >= 40 followed by the Stirling
// series (Bernoulli terms up to B_20), in long double. Reflection for Re < 0.5.
inline LComplex log_gamma(LComplex z) {
  if (z.real() < 0.5L) {
    // log Gamma(z) = log(pi) - log(sin(pi z)) - log Gamma(1 - z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0L - z);
  }
  LComplex shift = 0.0L;
  while (z.real() < 40.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  static constexpr long double kB[] = {
      1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
      -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330};
  LComplex series = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * kPi);
  LComplex zpow = z;
  const LComplex z2 = z * z;
  for (int j = 1; j <= 10; ++j) {
    series += kB[j - 1] / (static_cast<long double>(2 * j) * (2 * j - 1) * zpow);
    zpow *= z2;
  }
  return series - shift;
}

inline LComplex gamma(LComplex z) {
  if (z.real() < 0.5L) return kPi / (std::sin(kPi * z) * gamma(1.0L - z));
  return std::exp(log_gamma(z));
}

inline std::complex<double> gamma(std::complex<double> z) {
  const LComplex g = gamma(LComplex(z.real(), z.imag()));
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

// Direct summation of sum_k (g)_{qk} z^k / (Gamma(b + a k) (d)_{pk}) with every
// coefficient computed from scratch through the oracle Gamma.
inline std::complex<double> ml_series(std::complex<double> alpha, std::complex<double> beta,
                                      std::complex<double> gam, std::complex<double> del,
                                      double q, double p, std::complex<double> z,
                                      int terms = 120) {
  const LComplex a(alpha.real(), alpha.imag()), b(beta.real(), beta.imag());
  const LComplex g(gam.real(), gam.imag()), d(del.real(), del.imag());
  const LComplex zz(z.real(), z.imag());
  LComplex sum = 0.0L;
  for (int k = 0; k < terms; ++k) {
    const long double kk = k;
    const LComplex log_coeff = log_gamma(g + q * kk) - log_gamma(g) - log_gamma(b + a * kk) -
                               (log_gamma(d + p * kk) - log_gamma(d));
    const LComplex term = (k == 0) ? std::exp(log_coeff)
                                   : std::exp(log_coeff + kk * std::log(zz));
    sum += term;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Pascal's triangle; exact for the sizes used in the tests.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = (i < k ? i : k); j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

// Naive evaluation of h(z) + s * conj(g(z)) with explicit powers.
inline std::complex<double> harmonic_eval(const std::vector<std::complex<double>>& a_tail,
                                          const std::vector<std::complex<double>>& b, int s,
                                          std::complex<double> z) {
  LComplex zz(z.real(), z.imag());
  LComplex h = zz, g = 0.0L;
  for (std::size_t i = 0; i < a_tail.size(); ++i) {
    h += LComplex(a_tail[i].real(), a_tail[i].imag()) * std::pow(zz, static_cast<int>(i + 2));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    g += LComplex(b[i].real(), b[i].imag()) * std::pow(zz, static_cast<int>(i + 1));
  }
  const LComplex f = h + static_cast<long double>(s) * std::conj(g);
  return {static_cast<double>(f.real()), static_cast<double>(f.imag())};
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double scale = std::abs(want);
  return std::abs(got - want) / (scale > 0 ? scale : 1.0);
}

}  // namespace oracle

#endif  // MLHARM_TESTS_ORACLES_HPP
