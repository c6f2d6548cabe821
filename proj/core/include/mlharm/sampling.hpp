#ifndef MLHARM_SAMPLING_HPP
#define MLHARM_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "mlharm/family.hpp"

namespace mlharm {

// Seed used by every randomized suite unless one is given explicitly.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Fixed-seed generator with a platform-independent mapping to doubles
/// (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  /// Uniform integer in the closed range [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);
  /// Standard exponential; used to build flat Dirichlet draws.
  double exponential();

 private:
  std::mt19937_64 engine_;
};

struct MemberDraw {
  std::size_t support = 8;          // extreme points h_k, g_k used for k <= support
  double min_x1 = 0.05;             // lower bound on the weight of h_1(z) = z
  std::optional<double> fixed_b1;   // pin |b_1| to this value
  std::size_t order = 0;            // map order (0: default)
};

/// Random X_k, Y_k over k <= support with X_1 >= min_x1 * (mass left after Y_1).
ExtremePointWeights random_extreme_weights(Rng& rng, const FamilyParams& fp, const MemberDraw& d);

NegativeStyleMap random_member(Rng& rng, const FamilyParams& fp, const MemberDraw& d = {});

/// Complex x_k (k = 2..support), y_k (k = 1..support) with random phases and
/// sum of magnitudes one.
ExtremalWeights random_extremal_weights(Rng& rng, std::size_t support);

/// Sign-patterned map whose necessity margin is below -min_violation.
NegativeStyleMap random_violator(Rng& rng, const FamilyParams& fp, double min_violation,
                                 std::size_t support = 8);

}  // namespace mlharm

#endif  // MLHARM_SAMPLING_HPP
