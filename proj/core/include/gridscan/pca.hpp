#ifndef GRIDSCAN_PCA_HPP
#define GRIDSCAN_PCA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gridscan/dataset.hpp"

namespace gridscan {

/// Top principal axes of a dataset: sample mean, pairwise-orthonormal axes
/// and their explained variances in descending order.
struct PrincipalAxes {
  std::vector<double> mean;
  std::vector<std::vector<double>> axes;
  std::vector<double> variances;
};

/// Top-s eigenpairs of the sample covariance via orthogonal power iteration
/// with deflation (tolerance 1e-10 on the axis change, at most 1000
/// iterations per axis). Minimal by intent; it anchors the runtime
/// comparison and the plot projection for dim > 2.
///
/// Throws Error(degenerate_covariance) when the dataset has zero variance
/// and Error(invalid_argument) for J < 2 or s outside [1, N].
PrincipalAxes pca_fit(const Dataset& dataset, std::uint32_t s);

/// Coordinates of a point in the axes' frame: axes * (point - mean).
std::vector<double> project(const PrincipalAxes& axes,
                            std::span<const double> point);

}  // namespace gridscan

#endif  // GRIDSCAN_PCA_HPP
