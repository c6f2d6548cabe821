#ifndef MLHARM_HARMONIC_HPP
#define MLHARM_HARMONIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mlharm/grid.hpp"
#include "mlharm/specfun.hpp"

namespace mlharm {

/// Truncated harmonic map f = h + conj(g) on the unit disc with
///
///   h(z) = z + sum_{k=2}^{K} a_k z^k,   g(z) = co_sign * sum_{k=1}^{K} b_k z^k.
///
/// The sign in front of g is kept apart from the b_k so that the alternating
/// pattern (-1)^{m-1} of the negative-coefficient family survives operator
/// application unchanged. Generic maps use co_sign = +1.
///
/// Coefficient lists shorter than the order are zero-padded; the default order
/// is 32 or the longest list, whichever is larger. |b_1| < 1 is enforced.
class HarmonicMap {
 public:
  static constexpr std::size_t kDefaultOrder = 32;

  /// `a_tail[i]` is a_{i+2}; `b[i]` is b_{i+1}. `order == 0` selects the default.
  HarmonicMap(std::vector<Complex> a_tail, std::vector<Complex> b, std::size_t order = 0,
              int co_sign = 1);

  static HarmonicMap identity(std::size_t order = kDefaultOrder);

  std::size_t order() const noexcept { return order_; }
  int co_sign() const noexcept { return co_sign_; }

  /// a_1 == 1; indices past the order read as zero.
  Complex a(std::size_t k) const;
  Complex b(std::size_t k) const;

  std::span<const Complex> analytic_tail() const noexcept { return a_; }
  std::span<const Complex> coanalytic() const noexcept { return b_; }

 private:
  std::vector<Complex> a_;  // k = 2..K
  std::vector<Complex> b_;  // k = 1..K
  std::size_t order_;
  int co_sign_;
};

/// Map of the sign-patterned family
///
///   h(z) = z - sum_{k>=2} |a_k| z^k,   g(z) = (-1)^{m-1} sum_{k>=1} |b_k| z^k.
///
/// Stores the nonnegative magnitudes together with the equivalent HarmonicMap.
class NegativeStyleMap {
 public:
  NegativeStyleMap(std::vector<double> a_magnitudes, std::vector<double> b_magnitudes, int co_sign,
                   std::size_t order = 0);

  /// co_sign = (-1)^{m-1}.
  static int sign_for(unsigned m) noexcept { return (m % 2 == 1) ? 1 : -1; }
  static NegativeStyleMap identity(unsigned m, std::size_t order = HarmonicMap::kDefaultOrder);

  std::size_t order() const noexcept { return map_.order(); }
  int co_sign() const noexcept { return map_.co_sign(); }

  /// |a_k|, with |a_1| == 1.
  double a_mag(std::size_t k) const;
  double b_mag(std::size_t k) const;

  const HarmonicMap& map() const noexcept { return map_; }

 private:
  std::vector<double> a_;  // k = 2..K
  std::vector<double> b_;  // k = 1..K
  HarmonicMap map_;
};

Complex eval(const HarmonicMap& f, Complex z);

struct Derivatives {
  Complex h_prime;
  Complex g_prime;  // includes co_sign
};

Derivatives eval_derivatives(const HarmonicMap& f, Complex z);

struct SampledMinimum {
  double value;
  Complex point;
};

/// min over the grid of |h'(z)| - |g'(z)|, with the point attaining it
/// (first in grid order on ties).
SampledMinimum sense_preserving_minimum(const HarmonicMap& f, const SampleGrid& grid);

inline double sense_preserving_margin(const HarmonicMap& f, const SampleGrid& grid) {
  return sense_preserving_minimum(f, grid).value;
}

}  // namespace mlharm

#endif  // MLHARM_HARMONIC_HPP
