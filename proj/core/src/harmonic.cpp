#include "mlharm/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mlharm/errors.hpp"

namespace mlharm {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::size_t resolve_order(std::size_t requested, std::size_t a_len, std::size_t b_len) {
  const std::size_t needed = std::max(a_len + 1, b_len);
  if (requested == 0) return std::max(HarmonicMap::kDefaultOrder, needed);
  if (requested < needed) throw ParameterError("HarmonicMap: coefficient list longer than order");
  return requested;
}

void check_disc(Complex z) {
  if (!finite(z) || !(std::abs(z) < 1.0)) {
    throw DomainError("harmonic map evaluated outside the open unit disc");
  }
}

std::vector<Complex> to_complex(const std::vector<double>& v, double sign) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (double x : v) out.emplace_back(sign * x, 0.0);
  return out;
}

void check_magnitudes(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0) {
      throw ParameterError("NegativeStyleMap: magnitudes must be finite and nonnegative");
    }
  }
}

}  // namespace

HarmonicMap::HarmonicMap(std::vector<Complex> a_tail, std::vector<Complex> b, std::size_t order,
                         int co_sign)
    : a_(std::move(a_tail)),
      b_(std::move(b)),
      order_(resolve_order(order, a_.size(), b_.size())),
      co_sign_(co_sign) {
  if (co_sign != 1 && co_sign != -1) throw ParameterError("HarmonicMap: co_sign must be +1 or -1");
  if (order_ < 1) throw ParameterError("HarmonicMap: order must be >= 1");
  a_.resize(order_ - 1, Complex{});
  b_.resize(order_, Complex{});
  for (const auto& c : a_) {
    if (!finite(c)) throw ParameterError("HarmonicMap: non-finite coefficient");
  }
  for (const auto& c : b_) {
    if (!finite(c)) throw ParameterError("HarmonicMap: non-finite coefficient");
  }
  if (!(std::abs(b_[0]) < 1.0)) throw CoefficientOutOfRange("HarmonicMap: requires |b_1| < 1");
}

HarmonicMap HarmonicMap::identity(std::size_t order) { return HarmonicMap({}, {}, order); }

Complex HarmonicMap::a(std::size_t k) const {
  if (k == 1) return 1.0;
  if (k < 2 || k > order_) return 0.0;
  return a_[k - 2];
}

Complex HarmonicMap::b(std::size_t k) const {
  if (k < 1 || k > order_) return 0.0;
  return b_[k - 1];
}

NegativeStyleMap::NegativeStyleMap(std::vector<double> a_magnitudes,
                                   std::vector<double> b_magnitudes, int co_sign,
                                   std::size_t order)
    : a_((check_magnitudes(a_magnitudes), std::move(a_magnitudes))),
      b_((check_magnitudes(b_magnitudes), std::move(b_magnitudes))),
      map_(to_complex(a_, -1.0), to_complex(b_, 1.0), order, co_sign) {
  a_.resize(map_.order() - 1, 0.0);
  b_.resize(map_.order(), 0.0);
}

NegativeStyleMap NegativeStyleMap::identity(unsigned m, std::size_t order) {
  return NegativeStyleMap({}, {}, sign_for(m), order);
}

double NegativeStyleMap::a_mag(std::size_t k) const {
  if (k == 1) return 1.0;
  if (k < 2 || k > order()) return 0.0;
  return a_[k - 2];
}

double NegativeStyleMap::b_mag(std::size_t k) const {
  if (k < 1 || k > order()) return 0.0;
  return b_[k - 1];
}

Complex eval(const HarmonicMap& f, Complex z) {
  check_disc(z);
  const auto a = f.analytic_tail();
  const auto b = f.coanalytic();

  Complex h = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) h = (h + a[i]) * z;
  h = (h + 1.0) * z;

  Complex g = 0.0;
  for (std::size_t i = b.size(); i-- > 0;) g = (g + b[i]) * z;

  return h + std::conj(static_cast<double>(f.co_sign()) * g);
}

Derivatives eval_derivatives(const HarmonicMap& f, Complex z) {
  check_disc(z);
  const auto a = f.analytic_tail();
  const auto b = f.coanalytic();

  // h'(z) = 1 + sum k a_k z^{k-1}; a[i] holds a_{i+2}.
  Complex hp = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) hp = (hp + static_cast<double>(i + 2) * a[i]) * z;
  hp += 1.0;

  Complex gp = 0.0;
  for (std::size_t i = b.size(); i-- > 1;) gp = (gp + static_cast<double>(i + 1) * b[i]) * z;
  gp += b.empty() ? Complex{} : b[0];

  return {hp, static_cast<double>(f.co_sign()) * gp};
}

SampledMinimum sense_preserving_minimum(const HarmonicMap& f, const SampleGrid& grid) {
  SampledMinimum best{std::numeric_limits<double>::infinity(), Complex{}};
  for (std::size_t i = 0; i < grid.radii().size(); ++i) {
    for (unsigned j = 0; j < grid.angles_per_radius(); ++j) {
      const Complex z = grid.point(i, j);
      const auto d = eval_derivatives(f, z);
      const double margin = std::abs(d.h_prime) - std::abs(d.g_prime);
      if (margin < best.value) best = {margin, z};
    }
  }
  return best;
}

}  // namespace mlharm
