#include "mlharm/verify.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "mlharm/errors.hpp"
#include "mlharm/operator.hpp"
#include "mlharm/sampling.hpp"

namespace mlharm {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

SampledMinimum quotient_minimum(const HarmonicMap& f, const FamilyParams& fp,
                                const SampleGrid& grid) {
  const HarmonicMap top = apply_operator(f, fp.ml(), fp.m());
  const HarmonicMap bottom = apply_operator(f, fp.ml(), fp.n());

  SampledMinimum best{kInf, Complex{}};
  std::vector<Complex> degenerate;
  for (std::size_t i = 0; i < grid.radii().size(); ++i) {
    for (unsigned j = 0; j < grid.angles_per_radius(); ++j) {
      const Complex z = grid.point(i, j);
      const Complex den = eval(bottom, z);
      if (std::abs(den) <= kDegenerateDenominator) {
        degenerate.push_back(z);
        continue;
      }
      const double q = (eval(top, z) / den).real();
      if (q < best.value) best = {q, z};
    }
  }
  if (!degenerate.empty()) {
    throw DegenerateDenominator("quotient_min: Phi^n f vanishes at " +
                                    std::to_string(degenerate.size()) + " sample point(s)",
                                std::move(degenerate));
  }
  return best;
}

bool halfplane_identity(Complex w, double eta) {
  const bool half_plane = w.real() > eta;
  const bool moduli = std::abs(1.0 - eta + w) >= std::abs(1.0 + eta - w);
  return half_plane == moduli;
}

VerificationReport verify_member(const HarmonicMap& f, const FamilyParams& fp,
                                 const SampleGrid& grid) {
  const auto quotient = quotient_minimum(f, fp, grid);
  const auto sense = sense_preserving_minimum(f, grid);

  VerificationReport r;
  r.min_quotient_re = quotient.value;
  r.min_sense_margin = sense.value;
  r.tolerance = kSamplingTolerance;
  r.samples = 2 * grid.size();
  r.worst_point = (quotient.value - fp.eta() <= sense.value) ? quotient.point : sense.point;
  r.passed = quotient.value > fp.eta() - kSamplingTolerance && sense.value > -kSamplingTolerance;
  return r;
}

VerificationReport verify_distortion(const FamilyParams& fp, double b1,
                                     std::span<const NegativeStyleMap> maps,
                                     const SampleGrid& grid) {
  VerificationReport r;
  r.min_quotient_re = kNaN;
  r.min_sense_margin = kNaN;
  r.tolerance = kSaturationTolerance;

  double worst_slack = kInf;
  for (std::size_t i = 0; i < grid.radii().size(); ++i) {
    const double radius = grid.radii()[i];
    const auto bounds = distortion_bounds(fp, b1, radius);
    r.monotonicity_warning = r.monotonicity_warning || !bounds.monotone;
    for (const auto& f : maps) {
      double lo = kInf, hi = -kInf;
      for (unsigned j = 0; j < grid.angles_per_radius(); ++j) {
        const Complex z = grid.point(i, j);
        const double mod = std::abs(eval(f.map(), z));
        lo = std::min(lo, mod);
        hi = std::max(hi, mod);
        const double slack = std::min(bounds.upper - mod, mod - bounds.lower);
        if (slack < worst_slack) {
          worst_slack = slack;
          r.worst_point = z;
        }
        ++r.samples;
      }
      if (hi > bounds.upper + kSaturationTolerance) ++r.distortion_violations;
      if (lo < bounds.lower - kSaturationTolerance) ++r.distortion_violations;
    }
  }
  r.passed = r.distortion_violations == 0;
  return r;
}

VerificationReport verify_distortion(const FamilyParams& fp, double b1, std::size_t trials,
                                     const SampleGrid& grid, std::uint64_t seed) {
  Rng rng(seed);
  MemberDraw draw;
  draw.fixed_b1 = b1;
  std::vector<NegativeStyleMap> maps;
  maps.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) maps.push_back(random_member(rng, fp, draw));
  return verify_distortion(fp, b1, maps, grid);
}

VerificationReport verify_member_suite(const FamilyParams& fp, std::size_t trials,
                                       const SampleGrid& grid, std::uint64_t seed) {
  Rng rng(seed);
  VerificationReport total;
  total.min_quotient_re = kInf;
  total.min_sense_margin = kInf;
  total.tolerance = kSamplingTolerance;
  total.passed = true;
  double worst_slack = kInf;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto f = random_member(rng, fp);
    const auto r = verify_member(f.map(), fp, grid);
    total.min_quotient_re = std::min(total.min_quotient_re, r.min_quotient_re);
    total.min_sense_margin = std::min(total.min_sense_margin, r.min_sense_margin);
    total.samples += r.samples;
    total.passed = total.passed && r.passed;
    const double slack = std::min(r.min_quotient_re - fp.eta(), r.min_sense_margin);
    if (slack < worst_slack) {
      worst_slack = slack;
      total.worst_point = r.worst_point;
    }
  }
  return total;
}

}  // namespace mlharm
