#include "gridscan/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gridscan/error.hpp"

namespace gridscan {

Dataset::Dataset(std::vector<double> coords, std::uint32_t dim)
    : coords_(std::move(coords)), dim_(dim) {
  if (dim_ == 0) {
    throw Error(ErrorCode::invalid_argument, "ambient dimension must be >= 1");
  }
  if (coords_.empty()) {
    throw Error(ErrorCode::empty_dataset, "dataset has no points");
  }
  if (coords_.size() % dim_ != 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "coordinate buffer is not a whole number of points");
  }
  size_ = coords_.size() / dim_;
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::invalid_coordinate,
                  "non-finite coordinate in dataset");
    }
    if (c < 0.0 || c > 1.0) {
      throw Error(ErrorCode::invalid_coordinate,
                  "coordinate outside the unit cube: " + std::to_string(c));
    }
  }
}

std::vector<double> UnitCubeTransform::to_unit(
    std::span<const double> raw) const {
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    // Clamp absorbs the final-ulp overshoot of the multiply.
    out[i] = std::clamp((raw[i] - offset[i]) * scale[i], 0.0, 1.0);
  }
  return out;
}

std::vector<double> UnitCubeTransform::to_raw(
    std::span<const double> unit) const {
  std::vector<double> out(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) {
    out[i] = unit[i] / scale[i] + offset[i];
  }
  return out;
}

std::pair<Dataset, UnitCubeTransform> normalize_to_unit_cube(
    const std::vector<std::vector<double>>& raw_points) {
  if (raw_points.empty()) {
    throw Error(ErrorCode::empty_dataset, "no points to normalize");
  }
  const std::size_t dim = raw_points.front().size();
  if (dim == 0) {
    throw Error(ErrorCode::dimension_mismatch, "points have dimension 0");
  }

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const auto& p : raw_points) {
    if (p.size() != dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "inconsistent point dimensions: expected " +
                      std::to_string(dim) + ", got " +
                      std::to_string(p.size()));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (!std::isfinite(p[i])) {
        throw Error(ErrorCode::invalid_coordinate,
                    "non-finite coordinate in raw points");
      }
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }

  UnitCubeTransform transform;
  transform.offset.resize(dim);
  transform.scale.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double extent = hi[i] - lo[i];
    if (extent > 0.0) {
      transform.offset[i] = lo[i];
      transform.scale[i] = 1.0 / extent;
    } else {
      // Zero-extent axis: park the coordinate at 0.5, keep the map invertible.
      transform.offset[i] = lo[i] - 0.5;
      transform.scale[i] = 1.0;
    }
  }

  std::vector<double> coords;
  coords.reserve(raw_points.size() * dim);
  for (const auto& p : raw_points) {
    const std::vector<double> unit = transform.to_unit(p);
    coords.insert(coords.end(), unit.begin(), unit.end());
  }

  return {Dataset(std::move(coords), static_cast<std::uint32_t>(dim)),
          std::move(transform)};
}

}  // namespace gridscan
