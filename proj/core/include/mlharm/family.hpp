#ifndef MLHARM_FAMILY_HPP
#define MLHARM_FAMILY_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mlharm/harmonic.hpp"
#include "mlharm/operator.hpp"

namespace mlharm {

// Absolute tolerance separating member / boundary / violator verdicts.
inline constexpr double kBoundaryTolerance = 1e-10;

enum class Verdict { member, boundary, violator };
enum class MembershipTest { sufficiency, necessity };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(MembershipTest t) noexcept;

/// Outcome of a coefficient test.
///
/// margin = threshold - sum_value. The truncated sum can only grow if the
/// series continued, so:
///   violator  iff margin < -boundary_tol
///   member    iff margin >  boundary_tol + tail_bound
///   boundary  otherwise.
/// With tail_bound == 0 this is the plain |margin| <= boundary_tol rule.
struct MembershipReport {
  MembershipTest test;
  double sum_value;
  double threshold;
  double margin;
  Verdict verdict;
  double boundary_tol;
  double tail_bound;          // geometric extrapolation of the dropped tail; +inf if not decaying
  bool boundary_parameters;   // kernel parameters use the Re(alpha) == 0 extension
};

/// Combined multipliers of a family up to truncation K:
///   analytic(k)   = Lambda_k^{(m)} - eta Lambda_k^{(n)}
///   coanalytic(k) = Lambda_k^{(m)} - (-1)^{m-n} eta Lambda_k^{(n)}
class FamilyWeights {
 public:
  FamilyWeights(const FamilyParams& fp, std::size_t K);

  std::size_t truncation() const noexcept { return lambda_m_.truncation(); }
  double lambda_m(std::size_t k) const { return lambda_m_.at(k); }
  double lambda_n(std::size_t k) const { return lambda_n_.at(k); }
  double analytic(std::size_t k) const;
  double coanalytic(std::size_t k) const;

  /// analytic(k) non-decreasing over k = 2..K (needed by the distortion bound).
  bool monotone() const;

  /// analytic(k)/(1-eta) >= k and coanalytic(k)/(1-eta) >= k for k = 1..K.
  /// Under this the coefficient condition also bounds sum k|a_k| and sum k|b_k|,
  /// which is what makes members sense-preserving.
  bool dominates_index() const;

 private:
  double eta_;
  int parity_;
  WeightTable lambda_m_;
  WeightTable lambda_n_;
};

/// Sufficient condition for f in SH(m,n,eta):
///   sum_{k>=1} [analytic(k)/(1-eta) |a_k| + coanalytic(k)/(1-eta) |b_k|] <= 2,  a_1 = 1.
/// "member" certifies membership; "violator" certifies nothing for generic maps.
MembershipReport sufficiency_sum(const HarmonicMap& f, const FamilyParams& fp);

/// Characterizing condition for the sign-patterned family:
///   sum_{k>=1} [analytic(k) |a_k| + coanalytic(k) |b_k|] <= 2(1-eta).
/// Throws PreconditionError if f's co_sign is not (-1)^{m-1}.
MembershipReport necessity_check(const NegativeStyleMap& f, const FamilyParams& fp);

/// Numerator of the quotient condition restricted to z = mu on the positive real axis:
///   (1-eta) - sum_{k>=2} analytic(k) |a_k| mu^{k-1} - sum_{k>=1} coanalytic(k) |b_k| mu^{k-1}.
/// mu in [0, 1]; mu = 1 gives threshold minus the necessity sum.
double realaxis_numerator(const NegativeStyleMap& f, const FamilyParams& fp, double mu);

/// Normalized weights (x_k for k >= 2, y_k for k >= 1) with sum |x_k| + sum |y_k| = 1.
class ExtremalWeights {
 public:
  /// `x[i]` is x_{i+2}; `y[i]` is y_{i+1}.
  ExtremalWeights(std::vector<Complex> x, std::vector<Complex> y);

  const std::vector<Complex>& x() const noexcept { return x_; }
  const std::vector<Complex>& y() const noexcept { return y_; }

 private:
  std::vector<Complex> x_;
  std::vector<Complex> y_;
};

/// Map saturating the sufficient condition:
///   a_k = (1-eta) x_k / analytic(k),  b_k = (1-eta) y_k / coanalytic(k).
/// Throws CoefficientOutOfRange if the result has |b_1| >= 1.
HarmonicMap extremal_map(const FamilyParams& fp, const ExtremalWeights& w, std::size_t order = 0);

enum class ExtremeKind { h, g };

/// (1-eta)/analytic(k) for kind h, (1-eta)/coanalytic(k) for kind g.
double extreme_coefficient(const FamilyParams& fp, ExtremeKind kind, std::size_t k);

/// Extreme points of the sign-patterned family:
///   h_1(z) = z,  h_k(z) = z - (1-eta)/analytic(k) z^k            (k >= 2)
///   g_k(z) = z + (-1)^{m-1} (1-eta)/coanalytic(k) conj(z)^k      (k >= 1)
/// Throws CoefficientOutOfRange for a g_1 point with coefficient >= 1.
NegativeStyleMap extreme_point(const FamilyParams& fp, ExtremeKind kind, std::size_t k,
                               std::size_t order = 0);

/// Convex weights over the extreme points: X_k, Y_k >= 0 with
/// X_1 = 1 - sum_{k>=2} X_k - sum_{k>=1} Y_k >= 0.
class ExtremePointWeights {
 public:
  /// `X[i]` is X_{i+1} (so X[0] is X_1); `Y[i]` is Y_{i+1}. Total must be 1 within 1e-12.
  ExtremePointWeights(std::vector<double> X, std::vector<double> Y);

  /// Derives X_1 from X_2.. and Y_1..
  static ExtremePointWeights completing(std::vector<double> X_tail, std::vector<double> Y);

  const std::vector<double>& X() const noexcept { return X_; }
  const std::vector<double>& Y() const noexcept { return Y_; }

 private:
  std::vector<double> X_;
  std::vector<double> Y_;
};

/// sum_k [X_k h_k + Y_k g_k]; necessity sum equals (1-eta)(2 - X_1).
NegativeStyleMap combine_extreme_points(const FamilyParams& fp, const ExtremePointWeights& w,
                                        std::size_t order = 0);

/// Inverse of combine_extreme_points for a member of the sign-patterned family.
ExtremePointWeights decompose(const FamilyParams& fp, const NegativeStyleMap& f);

struct DistortionBounds {
  double lower;
  double upper;
  double coefficient;  // W
  bool monotone;       // false: weight monotonicity failed, bounds are unverified
};

/// lower(r) = (1-b1) r - W r^2,  upper(r) = (1+b1) r + W r^2, with
///   W = [(1-eta) - (1 - (-1)^{m-n} eta) b1] / analytic(2).
/// Monotonicity of analytic(k) is checked up to `K`.
DistortionBounds distortion_bounds(const FamilyParams& fp, double b1, double r,
                                   std::size_t K = HarmonicMap::kDefaultOrder);

/// (m+1)(gamma)_q / (Gamma(beta+alpha)(delta)_p). Diagnostic only; equals Lambda_2^{(m)}.
Complex upsilon2(const FamilyParams& fp);

/// Hadamard product of the coefficient magnitudes; order is min of the two orders.
NegativeStyleMap convolve(const NegativeStyleMap& f, const NegativeStyleMap& F);

/// necessity_check(convolve(f, F), fp_eta) after checking that f is in the family
/// at eta, F at rho = fp_rho.eta() <= eta, and both share (m, n, kernel).
MembershipReport convolution_closure_check(const NegativeStyleMap& f, const NegativeStyleMap& F,
                                           const FamilyParams& fp_eta, const FamilyParams& fp_rho);

struct Combination {
  NegativeStyleMap map;
  MembershipReport report;
};

/// Coefficient-wise convex combination sum_j t_j f_j. Requires sum t_j = 1 within
/// 1e-12, t_j >= 0, and every f_j in the family at fp.
Combination convex_combine(std::span<const NegativeStyleMap> maps, std::span<const double> t,
                           const FamilyParams& fp);

}  // namespace mlharm

#endif  // MLHARM_FAMILY_HPP
