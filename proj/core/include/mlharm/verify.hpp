#ifndef MLHARM_VERIFY_HPP
#define MLHARM_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "mlharm/family.hpp"
#include "mlharm/grid.hpp"
#include "mlharm/harmonic.hpp"

namespace mlharm {

// Slack for sampled inequalities (rounding accumulated over <= 32-term Horner sums).
inline constexpr double kSamplingTolerance = 1e-8;
// Slack for bound-saturation checks.
inline constexpr double kSaturationTolerance = 1e-9;
// |Phi^n f(z)| at or below this marks a degenerate quotient sample.
inline constexpr double kDegenerateDenominator = 1e-12;

/// min over the grid of Re(Phi^m f(z) / Phi^n f(z)) and where it is attained.
/// Throws DegenerateDenominator listing every point with |Phi^n f| <= 1e-12.
SampledMinimum quotient_minimum(const HarmonicMap& f, const FamilyParams& fp,
                                const SampleGrid& grid);

inline double quotient_min(const HarmonicMap& f, const FamilyParams& fp, const SampleGrid& grid) {
  return quotient_minimum(f, fp, grid).value;
}

/// Whether Re(w) > eta and |1 - eta + w| >= |1 + eta - w| agree at (w, eta).
/// They disagree exactly on the line Re(w) == eta.
bool halfplane_identity(Complex w, double eta);

struct VerificationReport {
  double min_quotient_re = 0.0;     // NaN when not sampled
  double min_sense_margin = 0.0;    // NaN when not sampled
  std::size_t distortion_violations = 0;
  Complex worst_point{};            // sample with the least slack
  bool passed = false;
  double tolerance = 0.0;
  std::size_t samples = 0;          // grid evaluations performed
  bool monotonicity_warning = false;
};

/// Samples the quotient condition and sense preservation on the grid.
/// passed iff min quotient > eta - 1e-8 and min(|h'| - |g'|) > -1e-8.
/// Meaningful for maps that pass sufficiency_sum; other maps are sampled the same way.
VerificationReport verify_member(const HarmonicMap& f, const FamilyParams& fp,
                                 const SampleGrid& grid);

/// Checks lower(r) - 1e-9 <= |f(z)| <= upper(r) + 1e-9 on every grid circle for
/// each map (all with |b_1| == b1). Each failing (map, radius, side) counts once.
VerificationReport verify_distortion(const FamilyParams& fp, double b1,
                                     std::span<const NegativeStyleMap> maps,
                                     const SampleGrid& grid);

/// As above over `trials` random extreme-point combinations drawn with
/// |b_1| == b1 from `seed`.
VerificationReport verify_distortion(const FamilyParams& fp, double b1, std::size_t trials,
                                     const SampleGrid& grid, std::uint64_t seed);

/// verify_member over `trials` random members (extreme-point combinations),
/// reduced to the worst values across all of them.
VerificationReport verify_member_suite(const FamilyParams& fp, std::size_t trials,
                                       const SampleGrid& grid, std::uint64_t seed);

}  // namespace mlharm

#endif  // MLHARM_VERIFY_HPP
