#include "mlharm/operator.hpp"

#include <cmath>
#include <string>

#include "mlharm/errors.hpp"

namespace mlharm {

FamilyParams::FamilyParams(unsigned m, unsigned n, double eta, MLParams ml)
    : m_(m), n_(n), eta_(eta), ml_(ml) {
  if (m < 1) throw ParameterError("FamilyParams: m must be >= 1");
  if (!(m > n)) throw ParameterError("FamilyParams: requires m > n");
  if (!std::isfinite(eta) || eta < 0.0 || !(eta < 1.0)) {
    throw ParameterError("FamilyParams: eta must lie in [0, 1)");
  }
}

Complex kernel_coeff(const MLParams& ml, std::size_t k) {
  if (k == 0) throw ParameterError("kernel_coeff: k must be >= 1");
  if (k == 1) return 1.0;
  const double j = static_cast<double>(k - 1);
  // Grouped so that gamma == delta, q == p cancels to an exact zero.
  const Complex log_c = (log_gamma(ml.gamma() + ml.q() * j) - log_gamma(ml.delta() + ml.p() * j)) +
                        (log_gamma(ml.delta()) - log_gamma(ml.gamma())) -
                        log_gamma(ml.beta() + ml.alpha() * j);
  return std::exp(log_c);
}

std::vector<Complex> kernel_coeffs(const MLParams& ml, std::size_t K) {
  if (K < 2) throw ParameterError("kernel_coeffs: K must be >= 2");
  std::vector<Complex> out;
  out.reserve(K - 1);
  for (std::size_t k = 2; k <= K; ++k) out.push_back(kernel_coeff(ml, k));
  return out;
}

double rising_binomial(unsigned m, std::size_t k) {
  if (k == 0) throw ParameterError("rising_binomial: k must be >= 1");
  double c = 1.0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    c *= static_cast<double>(m + 1 + j);
    c /= static_cast<double>(j + 1);
  }
  return c;
}

double weight(const MLParams& ml, unsigned m, std::size_t k) {
  if (k == 1) return 1.0;
  const Complex value = rising_binomial(m, k) * kernel_coeff(ml, k);
  const double re = value.real();
  if (!std::isfinite(re) || !std::isfinite(value.imag()) ||
      std::abs(value.imag()) > kWeightRealTolerance * std::max(1.0, std::abs(re)) || !(re > 0.0)) {
    throw NonPositiveWeight("weight: Lambda_" + std::to_string(k) + "^(" + std::to_string(m) +
                            ") is not a positive real number");
  }
  return re;
}

WeightTable::WeightTable(const MLParams& ml, unsigned order, std::size_t truncation)
    : order_(order) {
  if (truncation < 1) throw ParameterError("WeightTable: truncation must be >= 1");
  weights_.reserve(truncation);
  for (std::size_t k = 1; k <= truncation; ++k) weights_.push_back(weight(ml, order, k));
}

HarmonicMap apply_operator(const HarmonicMap& f, const WeightTable& table) {
  const std::size_t K = f.order();
  if (table.truncation() < K) throw ParameterError("apply_operator: weight table too short");

  std::vector<Complex> a;
  a.reserve(K - 1);
  for (std::size_t k = 2; k <= K; ++k) a.push_back(table.at(k) * f.a(k));
  std::vector<Complex> b;
  b.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) b.push_back(table.at(k) * f.b(k));

  const int sign = (table.order() % 2 == 0) ? f.co_sign() : -f.co_sign();
  return HarmonicMap(std::move(a), std::move(b), K, sign);
}

HarmonicMap apply_operator(const HarmonicMap& f, const MLParams& ml, unsigned m) {
  return apply_operator(f, WeightTable(ml, m, f.order()));
}

}  // namespace mlharm
