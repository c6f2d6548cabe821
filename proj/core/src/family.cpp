#include "mlharm/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mlharm/errors.hpp"

namespace mlharm {
namespace {

constexpr double kWeightSumTolerance = 1e-12;

// Estimate of the dropped tail from the last two stored terms, assuming geometric decay.
double tail_estimate(const std::vector<double>& terms) {
  if (terms.size() < 2) return 0.0;
  const double last = terms.back();
  if (last == 0.0) return 0.0;
  const double prev = terms[terms.size() - 2];
  if (!(prev > 0.0)) return std::numeric_limits<double>::infinity();
  const double ratio = last / prev;
  if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
  return last * ratio / (1.0 - ratio);
}

Verdict classify(double margin, double tol, double tail) {
  if (margin < -tol) return Verdict::violator;
  if (margin > tol + tail) return Verdict::member;
  return Verdict::boundary;
}

// terms[k-1] holds the variable part of the k-th summand.
MembershipReport make_report(MembershipTest test, double fixed, const std::vector<double>& terms,
                             double threshold, const FamilyParams& fp) {
  double sum = fixed;
  for (double t : terms) sum += t;
  const double margin = threshold - sum;
  const double tail = tail_estimate(terms);
  return MembershipReport{
      test,   sum,  threshold, margin, classify(margin, kBoundaryTolerance, tail),
      kBoundaryTolerance, tail, fp.ml().boundary()};
}

std::size_t order_for(std::size_t requested, std::size_t a_len, std::size_t b_len) {
  const std::size_t needed = std::max(a_len + 1, b_len);
  if (requested == 0) return std::max(HarmonicMap::kDefaultOrder, needed);
  if (requested < needed) throw ParameterError("requested order shorter than weight list");
  return requested;
}

bool same_family(const FamilyParams& a, const FamilyParams& b) {
  return a.m() == b.m() && a.n() == b.n() && a.ml() == b.ml();
}

void require_member(const NegativeStyleMap& f, const FamilyParams& fp, const char* who) {
  if (necessity_check(f, fp).verdict == Verdict::violator) {
    throw PreconditionError(std::string(who) + ": input map is not in the family");
  }
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::boundary: return "boundary";
    case Verdict::violator: return "violator";
  }
  return "unknown";
}

std::string_view to_string(MembershipTest t) noexcept {
  return t == MembershipTest::sufficiency ? "sufficiency" : "necessity";
}

FamilyWeights::FamilyWeights(const FamilyParams& fp, std::size_t K)
    : eta_(fp.eta()),
      parity_(fp.parity()),
      lambda_m_(fp.ml(), fp.m(), K),
      lambda_n_(fp.ml(), fp.n(), K) {}

double FamilyWeights::analytic(std::size_t k) const {
  return lambda_m(k) - eta_ * lambda_n(k);
}

double FamilyWeights::coanalytic(std::size_t k) const {
  return lambda_m(k) - static_cast<double>(parity_) * eta_ * lambda_n(k);
}

bool FamilyWeights::monotone() const {
  for (std::size_t k = 3; k <= truncation(); ++k) {
    if (analytic(k) < analytic(k - 1)) return false;
  }
  return true;
}

bool FamilyWeights::dominates_index() const {
  const double scale = 1.0 - eta_;
  for (std::size_t k = 1; k <= truncation(); ++k) {
    const double index = static_cast<double>(k);
    if (k >= 2 && analytic(k) / scale < index) return false;
    if (coanalytic(k) / scale < index) return false;
  }
  return true;
}

MembershipReport sufficiency_sum(const HarmonicMap& f, const FamilyParams& fp) {
  const std::size_t K = f.order();
  const FamilyWeights w(fp, K);
  const double scale = 1.0 - fp.eta();
  std::vector<double> terms(K, 0.0);
  for (std::size_t k = 1; k <= K; ++k) {
    double t = w.coanalytic(k) / scale * std::abs(f.b(k));
    if (k >= 2) t += w.analytic(k) / scale * std::abs(f.a(k));
    terms[k - 1] = t;
  }
  // a_1 = 1 contributes analytic(1)/(1-eta) = 1.
  return make_report(MembershipTest::sufficiency, 1.0, terms, 2.0, fp);
}

MembershipReport necessity_check(const NegativeStyleMap& f, const FamilyParams& fp) {
  if (f.co_sign() != NegativeStyleMap::sign_for(fp.m())) {
    throw PreconditionError("necessity_check: co-analytic sign does not match (-1)^(m-1)");
  }
  const std::size_t K = f.order();
  const FamilyWeights w(fp, K);
  std::vector<double> terms(K, 0.0);
  for (std::size_t k = 1; k <= K; ++k) {
    double t = w.coanalytic(k) * f.b_mag(k);
    if (k >= 2) t += w.analytic(k) * f.a_mag(k);
    terms[k - 1] = t;
  }
  const double level = 1.0 - fp.eta();
  return make_report(MembershipTest::necessity, level, terms, 2.0 * level, fp);
}

double realaxis_numerator(const NegativeStyleMap& f, const FamilyParams& fp, double mu) {
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw ParameterError("realaxis_numerator: mu must lie in [0, 1]");
  }
  const std::size_t K = f.order();
  const FamilyWeights w(fp, K);
  double value = 1.0 - fp.eta();
  double power = 1.0;  // mu^{k-1}
  for (std::size_t k = 1; k <= K; ++k) {
    if (k >= 2) value -= w.analytic(k) * f.a_mag(k) * power;
    value -= w.coanalytic(k) * f.b_mag(k) * power;
    power *= mu;
  }
  return value;
}

ExtremalWeights::ExtremalWeights(std::vector<Complex> x, std::vector<Complex> y)
    : x_(std::move(x)), y_(std::move(y)) {
  double total = 0.0;
  for (const auto& v : x_) total += std::abs(v);
  for (const auto& v : y_) total += std::abs(v);
  if (!std::isfinite(total) || std::abs(total - 1.0) > kWeightSumTolerance) {
    throw ParameterError("ExtremalWeights: sum |x_k| + sum |y_k| must equal 1");
  }
}

HarmonicMap extremal_map(const FamilyParams& fp, const ExtremalWeights& weights, std::size_t order) {
  const std::size_t K = order_for(order, weights.x().size(), weights.y().size());
  const FamilyWeights w(fp, K);
  const double scale = 1.0 - fp.eta();

  std::vector<Complex> a;
  a.reserve(weights.x().size());
  for (std::size_t i = 0; i < weights.x().size(); ++i) {
    a.push_back(scale * weights.x()[i] / w.analytic(i + 2));
  }
  std::vector<Complex> b;
  b.reserve(weights.y().size());
  for (std::size_t i = 0; i < weights.y().size(); ++i) {
    b.push_back(scale * weights.y()[i] / w.coanalytic(i + 1));
  }
  return HarmonicMap(std::move(a), std::move(b), K);
}

double extreme_coefficient(const FamilyParams& fp, ExtremeKind kind, std::size_t k) {
  if (kind == ExtremeKind::h && k == 1) return 0.0;  // h_1(z) = z
  if (k == 0) throw ParameterError("extreme_coefficient: k must be >= 1");
  const FamilyWeights w(fp, k);
  const double denom = (kind == ExtremeKind::h) ? w.analytic(k) : w.coanalytic(k);
  return (1.0 - fp.eta()) / denom;
}

NegativeStyleMap extreme_point(const FamilyParams& fp, ExtremeKind kind, std::size_t k,
                               std::size_t order) {
  if (k == 0) throw ParameterError("extreme_point: k must be >= 1");
  const int sign = NegativeStyleMap::sign_for(fp.m());
  const double c = extreme_coefficient(fp, kind, k);
  if (kind == ExtremeKind::h) {
    if (k == 1) return NegativeStyleMap::identity(fp.m(), order);
    std::vector<double> a(k - 1, 0.0);
    a[k - 2] = c;
    return NegativeStyleMap(std::move(a), {}, sign, order);
  }
  if (k == 1 && !(c < 1.0)) {
    throw CoefficientOutOfRange("extreme_point: g_1 would have |b_1| >= 1");
  }
  std::vector<double> b(k, 0.0);
  b[k - 1] = c;
  return NegativeStyleMap({}, std::move(b), sign, order);
}

ExtremePointWeights::ExtremePointWeights(std::vector<double> X, std::vector<double> Y)
    : X_(std::move(X)), Y_(std::move(Y)) {
  double total = 0.0;
  for (double v : X_) {
    if (!std::isfinite(v) || v < 0.0) throw ParameterError("ExtremePointWeights: X_k must be >= 0");
    total += v;
  }
  for (double v : Y_) {
    if (!std::isfinite(v) || v < 0.0) throw ParameterError("ExtremePointWeights: Y_k must be >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw ParameterError("ExtremePointWeights: weights must sum to 1");
  }
}

ExtremePointWeights ExtremePointWeights::completing(std::vector<double> X_tail,
                                                    std::vector<double> Y) {
  double rest = 0.0;
  for (double v : X_tail) rest += v;
  for (double v : Y) rest += v;
  const double x1 = 1.0 - rest;
  if (x1 < -kWeightSumTolerance) throw ParameterError("ExtremePointWeights: X_1 would be negative");
  std::vector<double> X;
  X.reserve(X_tail.size() + 1);
  X.push_back(std::max(x1, 0.0));
  X.insert(X.end(), X_tail.begin(), X_tail.end());
  return ExtremePointWeights(std::move(X), std::move(Y));
}

NegativeStyleMap combine_extreme_points(const FamilyParams& fp, const ExtremePointWeights& weights,
                                        std::size_t order) {
  const auto& X = weights.X();
  const auto& Y = weights.Y();
  const std::size_t a_len = X.size() > 1 ? X.size() - 1 : 0;
  const std::size_t K = order_for(order, a_len, Y.size());
  const FamilyWeights w(fp, K);
  const double scale = 1.0 - fp.eta();

  std::vector<double> a(a_len, 0.0);
  for (std::size_t k = 2; k <= X.size(); ++k) a[k - 2] = scale * X[k - 1] / w.analytic(k);
  std::vector<double> b(Y.size(), 0.0);
  for (std::size_t k = 1; k <= Y.size(); ++k) b[k - 1] = scale * Y[k - 1] / w.coanalytic(k);
  return NegativeStyleMap(std::move(a), std::move(b), NegativeStyleMap::sign_for(fp.m()), K);
}

ExtremePointWeights decompose(const FamilyParams& fp, const NegativeStyleMap& f) {
  const std::size_t K = f.order();
  const FamilyWeights w(fp, K);
  const double scale = 1.0 - fp.eta();
  std::vector<double> X_tail(K - 1, 0.0);
  for (std::size_t k = 2; k <= K; ++k) X_tail[k - 2] = w.analytic(k) / scale * f.a_mag(k);
  std::vector<double> Y(K, 0.0);
  for (std::size_t k = 1; k <= K; ++k) Y[k - 1] = w.coanalytic(k) / scale * f.b_mag(k);

  double rest = 0.0;
  for (double v : X_tail) rest += v;
  for (double v : Y) rest += v;
  if (1.0 - rest < -kBoundaryTolerance) {
    throw PreconditionError("decompose: map is not in the family");
  }
  std::vector<double> X;
  X.reserve(K);
  X.push_back(std::max(1.0 - rest, 0.0));
  X.insert(X.end(), X_tail.begin(), X_tail.end());
  // Re-normalize so the clamped X_1 keeps the total at exactly one.
  double total = 0.0;
  for (double v : X) total += v;
  for (double v : Y) total += v;
  for (double& v : X) v /= total;
  for (double& v : Y) v /= total;
  return ExtremePointWeights(std::move(X), std::move(Y));
}

DistortionBounds distortion_bounds(const FamilyParams& fp, double b1, double r, std::size_t K) {
  if (!std::isfinite(b1) || b1 < 0.0 || !(b1 < 1.0)) {
    throw ParameterError("distortion_bounds: b1 must lie in [0, 1)");
  }
  if (!std::isfinite(r) || !(r > 0.0) || !(r < 1.0)) {
    throw ParameterError("distortion_bounds: r must lie in (0, 1)");
  }
  const FamilyWeights w(fp, std::max<std::size_t>(K, 2));
  const double eta = fp.eta();
  const double numerator = (1.0 - eta) - (1.0 - fp.parity() * eta) * b1;
  if (numerator < 0.0) {
    throw PreconditionError("distortion_bounds: |b_1| too large for the family");
  }
  const double W = numerator / w.analytic(2);
  return DistortionBounds{(1.0 - b1) * r - W * r * r, (1.0 + b1) * r + W * r * r, W,
                          w.monotone()};
}

Complex upsilon2(const FamilyParams& fp) {
  const MLParams& ml = fp.ml();
  return static_cast<double>(fp.m() + 1) * pochhammer_ext(ml.gamma(), ml.q(), 1) /
         (complex_gamma(ml.beta() + ml.alpha()) * pochhammer_ext(ml.delta(), ml.p(), 1));
}

NegativeStyleMap convolve(const NegativeStyleMap& f, const NegativeStyleMap& F) {
  if (f.co_sign() != F.co_sign()) {
    throw PreconditionError("convolve: maps carry different co-analytic signs");
  }
  const std::size_t K = std::min(f.order(), F.order());
  std::vector<double> a(K - 1, 0.0);
  for (std::size_t k = 2; k <= K; ++k) a[k - 2] = f.a_mag(k) * F.a_mag(k);
  std::vector<double> b(K, 0.0);
  for (std::size_t k = 1; k <= K; ++k) b[k - 1] = f.b_mag(k) * F.b_mag(k);
  return NegativeStyleMap(std::move(a), std::move(b), f.co_sign(), K);
}

MembershipReport convolution_closure_check(const NegativeStyleMap& f, const NegativeStyleMap& F,
                                           const FamilyParams& fp_eta, const FamilyParams& fp_rho) {
  if (!same_family(fp_eta, fp_rho)) {
    throw PreconditionError("convolution_closure_check: families differ beyond eta");
  }
  if (fp_rho.eta() > fp_eta.eta()) {
    throw PreconditionError("convolution_closure_check: requires rho <= eta");
  }
  require_member(f, fp_eta, "convolution_closure_check");
  require_member(F, fp_rho, "convolution_closure_check");
  return necessity_check(convolve(f, F), fp_eta);
}

Combination convex_combine(std::span<const NegativeStyleMap> maps, std::span<const double> t,
                           const FamilyParams& fp) {
  if (maps.empty() || maps.size() != t.size()) {
    throw PreconditionError("convex_combine: need one weight per map");
  }
  double total = 0.0;
  for (double v : t) {
    if (!std::isfinite(v) || v < 0.0) throw PreconditionError("convex_combine: weights must be >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw PreconditionError("convex_combine: weights must sum to 1");
  }
  std::size_t K = 0;
  for (const auto& f : maps) {
    require_member(f, fp, "convex_combine");
    K = std::max(K, f.order());
  }

  std::vector<double> a(K - 1, 0.0);
  std::vector<double> b(K, 0.0);
  for (std::size_t j = 0; j < maps.size(); ++j) {
    for (std::size_t k = 2; k <= K; ++k) a[k - 2] += t[j] * maps[j].a_mag(k);
    for (std::size_t k = 1; k <= K; ++k) b[k - 1] += t[j] * maps[j].b_mag(k);
  }
  NegativeStyleMap combined(std::move(a), std::move(b), NegativeStyleMap::sign_for(fp.m()), K);
  auto report = necessity_check(combined, fp);
  return Combination{std::move(combined), report};
}

}  // namespace mlharm
