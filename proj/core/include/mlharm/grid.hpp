#ifndef MLHARM_GRID_HPP
#define MLHARM_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace mlharm {

/// Deterministic polar sample grid on the open unit disc.
///
/// Points are ordered radius-major, angle-minor. Angle j on every circle is
/// 2*pi*(j/N), so j = 0 is the positive real axis and the grid with 2N angles
/// contains every point of the grid with N angles bit-for-bit.
class SampleGrid {
 public:
  static constexpr double kMaxRadius = 0.999;

  SampleGrid(std::vector<double> radii, unsigned angles_per_radius);

  /// Radii {0.1, ..., 0.9, 0.95, 0.99} with 64 angles.
  static SampleGrid standard();

  const std::vector<double>& radii() const noexcept { return radii_; }
  unsigned angles_per_radius() const noexcept { return angles_; }
  std::size_t size() const noexcept { return radii_.size() * angles_; }

  double angle(unsigned j) const;
  std::complex<double> point(std::size_t radius_index, unsigned angle_index) const;
  std::vector<std::complex<double>> points() const;

  SampleGrid refined() const { return SampleGrid(radii_, 2 * angles_); }

 private:
  std::vector<double> radii_;
  unsigned angles_;
};

}  // namespace mlharm

#endif  // MLHARM_GRID_HPP
