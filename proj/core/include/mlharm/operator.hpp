#ifndef MLHARM_OPERATOR_HPP
#define MLHARM_OPERATOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mlharm/harmonic.hpp"
#include "mlharm/specfun.hpp"

namespace mlharm {

/// (m, n, eta) selecting a family, together with the kernel parameters.
/// m >= 1, 0 <= n < m, 0 <= eta < 1.
class FamilyParams {
 public:
  FamilyParams(unsigned m, unsigned n, double eta, MLParams ml);

  unsigned m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }
  double eta() const noexcept { return eta_; }
  const MLParams& ml() const noexcept { return ml_; }

  /// (-1)^{m-n}
  int parity() const noexcept { return ((m_ - n_) % 2 == 0) ? 1 : -1; }

  /// Same family at a different level eta.
  FamilyParams with_eta(double eta) const { return FamilyParams(m_, n_, eta, ml_); }

 private:
  unsigned m_, n_;
  double eta_;
  MLParams ml_;
};

// Imaginary parts below this (relative to max(1, |weight|)) are treated as rounding.
inline constexpr double kWeightRealTolerance = 1e-10;

/// Taylor coefficients of the normalized kernel
///   Theta(z) = z + sum_{k>=2} (gamma)_{q(k-1)} / (Gamma(beta + alpha(k-1)) (delta)_{p(k-1)}) z^k.
/// Entry i of the result is the coefficient of z^{i+2}; the z coefficient is 1.
std::vector<Complex> kernel_coeffs(const MLParams& ml, std::size_t K);

/// Coefficient of z^k in Theta (1 for k == 1).
Complex kernel_coeff(const MLParams& ml, std::size_t k);

/// (m+1)_{k-1} / (k-1)!, i.e. binomial(m+k-1, k-1); exact for representable results.
double rising_binomial(unsigned m, std::size_t k);

/// Coefficient multiplier of the m-th iterated operator on z^k:
///   Lambda_k^{(m)} = (m+1)_{k-1}/(k-1)! * kernel_coeff(k).
/// Throws NonPositiveWeight unless the value is real (within tolerance),
/// strictly positive and finite. weight(ml, m, 1) == 1.
double weight(const MLParams& ml, unsigned m, std::size_t k);

/// Lambda_k^{(m)} for k = 1..K.
class WeightTable {
 public:
  WeightTable(const MLParams& ml, unsigned order, std::size_t truncation);

  unsigned order() const noexcept { return order_; }
  std::size_t truncation() const noexcept { return weights_.size(); }

  /// 1-based: at(1) == 1.
  double at(std::size_t k) const { return weights_.at(k - 1); }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  unsigned order_;
  std::vector<double> weights_;
};

inline WeightTable weight_table(const MLParams& ml, unsigned m, std::size_t K) {
  return WeightTable(ml, m, K);
}

/// Phi^m f = Phi^m h + (-1)^m conj(Phi^m g): a_k -> Lambda_k a_k, b_k -> Lambda_k b_k,
/// and the conjugate part's sign picks up (-1)^m.
HarmonicMap apply_operator(const HarmonicMap& f, const MLParams& ml, unsigned m);
HarmonicMap apply_operator(const HarmonicMap& f, const WeightTable& table);

}  // namespace mlharm

#endif  // MLHARM_OPERATOR_HPP
