#ifndef GRIDSCAN_DATASET_HPP
#define GRIDSCAN_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gridscan {

/// Normalized point cloud. Every coordinate lies in [0,1]; all points share
/// the same ambient dimension. Storage is flat row-major, immutable after
/// construction.
class Dataset {
 public:
  /// Takes ownership of flat row-major coordinates. Validates that the
  /// buffer is a whole number of points, that every coordinate is finite
  /// and inside [0,1], and that the cloud is non-empty.
  Dataset(std::vector<double> coords, std::uint32_t dim);

  [[nodiscard]] std::uint32_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] std::span<const double> point(std::size_t j) const {
    return {coords_.data() + j * dim_, dim_};
  }

  [[nodiscard]] const std::vector<double>& coords() const noexcept {
    return coords_;
  }

 private:
  std::vector<double> coords_;
  std::uint32_t dim_;
  std::size_t size_;
};

/// Invertible per-axis affine map from raw data space into the unit cube:
/// unit = (raw - offset) * scale, with positive per-axis scale.
struct UnitCubeTransform {
  std::vector<double> offset;
  std::vector<double> scale;

  [[nodiscard]] std::vector<double> to_unit(std::span<const double> raw) const;
  [[nodiscard]] std::vector<double> to_raw(std::span<const double> unit) const;
};

/// Maps the bounding box of the raw points onto [0,1]^N. Axes with zero
/// extent collapse to coordinate 0.5 with scale 1 so the transform stays
/// invertible.
///
/// Throws Error(empty_dataset) for no points, Error(dimension_mismatch) for
/// ragged input and Error(invalid_coordinate) for non-finite values.
std::pair<Dataset, UnitCubeTransform> normalize_to_unit_cube(
    const std::vector<std::vector<double>>& raw_points);

}  // namespace gridscan

#endif  // GRIDSCAN_DATASET_HPP
