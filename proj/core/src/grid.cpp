#include "mlharm/grid.hpp"

#include <cmath>
#include <numbers>

#include "mlharm/errors.hpp"

namespace mlharm {

SampleGrid::SampleGrid(std::vector<double> radii, unsigned angles_per_radius)
    : radii_(std::move(radii)), angles_(angles_per_radius) {
  if (radii_.empty()) throw ParameterError("SampleGrid: no radii");
  if (angles_ == 0) throw ParameterError("SampleGrid: angles_per_radius must be positive");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    const double r = radii_[i];
    if (!std::isfinite(r) || !(r > 0.0) || r > kMaxRadius) {
      throw ParameterError("SampleGrid: radii must lie in (0, 0.999]");
    }
    if (i > 0 && !(r > radii_[i - 1])) {
      throw ParameterError("SampleGrid: radii must be strictly increasing");
    }
  }
}

SampleGrid SampleGrid::standard() {
  return SampleGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}, 64);
}

double SampleGrid::angle(unsigned j) const {
  return 2.0 * std::numbers::pi * (static_cast<double>(j) / static_cast<double>(angles_));
}

std::complex<double> SampleGrid::point(std::size_t radius_index, unsigned angle_index) const {
  return std::polar(radii_.at(radius_index), angle(angle_index));
}

std::vector<std::complex<double>> SampleGrid::points() const {
  std::vector<std::complex<double>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    for (unsigned j = 0; j < angles_; ++j) out.push_back(point(i, j));
  }
  return out;
}

}  // namespace mlharm
