#include "mlharm/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mlharm/errors.hpp"

namespace mlharm {
namespace {

// Flat Dirichlet draw over n slots.
std::vector<double> dirichlet(Rng& rng, std::size_t n) {
  std::vector<double> d(n);
  double total = 0.0;
  for (auto& v : d) {
    v = rng.exponential();
    total += v;
  }
  for (auto& v : d) v /= total;
  return d;
}

}  // namespace

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw ParameterError("Rng::index: empty range");
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

double Rng::exponential() { return -std::log1p(-uniform()); }

ExtremePointWeights random_extreme_weights(Rng& rng, const FamilyParams& fp, const MemberDraw& d) {
  if (d.support < 1) throw ParameterError("MemberDraw: support must be >= 1");
  if (d.min_x1 < 0.0 || !(d.min_x1 < 1.0)) throw ParameterError("MemberDraw: min_x1 in [0, 1)");
  const std::size_t S = d.support;

  double y1 = 0.0;
  if (d.fixed_b1) {
    // |b_1| = (1-eta) Y_1 / (1 - (-1)^{m-n} eta)
    y1 = *d.fixed_b1 * (1.0 - fp.parity() * fp.eta()) / (1.0 - fp.eta());
    if (*d.fixed_b1 < 0.0 || y1 > 1.0) {
      throw PreconditionError("random_extreme_weights: |b_1| not reachable in this family");
    }
  }
  const double mass = 1.0 - y1;
  const std::size_t free_slots = 1 + 2 * (S - 1) + (d.fixed_b1 ? 0 : 1);
  const auto w = dirichlet(rng, free_slots);
  const double spread = mass * (1.0 - d.min_x1);

  std::vector<double> X(S, 0.0), Y(S, 0.0);
  std::size_t slot = 0;
  X[0] = mass * d.min_x1 + spread * w[slot++];
  for (std::size_t k = 2; k <= S; ++k) X[k - 1] = spread * w[slot++];
  Y[0] = d.fixed_b1 ? y1 : spread * w[slot++];
  for (std::size_t k = 2; k <= S; ++k) Y[k - 1] = spread * w[slot++];
  return ExtremePointWeights(std::move(X), std::move(Y));
}

NegativeStyleMap random_member(Rng& rng, const FamilyParams& fp, const MemberDraw& d) {
  return combine_extreme_points(fp, random_extreme_weights(rng, fp, d), d.order);
}

ExtremalWeights random_extremal_weights(Rng& rng, std::size_t support) {
  if (support < 2) throw ParameterError("random_extremal_weights: support must be >= 2");
  const auto w = dirichlet(rng, 2 * support - 1);
  std::vector<Complex> x, y;
  std::size_t slot = 0;
  for (std::size_t k = 2; k <= support; ++k) {
    x.push_back(std::polar(w[slot++], rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  for (std::size_t k = 1; k <= support; ++k) {
    y.push_back(std::polar(w[slot++], rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  return ExtremalWeights(std::move(x), std::move(y));
}

NegativeStyleMap random_violator(Rng& rng, const FamilyParams& fp, double min_violation,
                                 std::size_t support) {
  if (support < 2) throw ParameterError("random_violator: support must be >= 2");
  if (!(min_violation > 0.0)) throw ParameterError("random_violator: min_violation must be > 0");
  const double scale = 1.0 - fp.eta();
  // Necessity sum is (1-eta)(2 + excess), so the margin is -(1-eta) excess.
  const double excess = min_violation / scale * (1.05 + rng.uniform());
  const auto w = dirichlet(rng, 2 * (support - 1));

  const FamilyWeights fw(fp, support);
  std::vector<double> a(support - 1, 0.0), b(support, 0.0);
  std::size_t slot = 0;
  for (std::size_t k = 2; k <= support; ++k) {
    a[k - 2] = scale * (1.0 + excess) * w[slot++] / fw.analytic(k);
  }
  for (std::size_t k = 2; k <= support; ++k) {
    b[k - 1] = scale * (1.0 + excess) * w[slot++] / fw.coanalytic(k);
  }
  return NegativeStyleMap(std::move(a), std::move(b), NegativeStyleMap::sign_for(fp.m()));
}

}  // namespace mlharm
