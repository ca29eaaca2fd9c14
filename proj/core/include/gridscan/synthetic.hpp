#ifndef GRIDSCAN_SYNTHETIC_HPP
#define GRIDSCAN_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "gridscan/dataset.hpp"

namespace gridscan {

enum class SyntheticKind { diagonal, sine_curve, uniform, two_clusters };

/// Recipe for a seeded synthetic dataset; the same spec always produces the
/// same points.
struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::uniform;
  std::size_t points = 100;
  std::uint32_t dim = 2;
  double outlier_fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Generates the dataset described by the spec:
///   - diagonal:    points i/(J-1) on the main diagonal, no randomness;
///   - sine_curve:  (1 - outlier_fraction)*J points on a fixed sine arc with
///                  Gaussian jitter of sigma 0.01, the rest uniform noise;
///   - uniform:     uniform points in the unit cube;
///   - two_clusters: two Gaussian blobs plus uniform outliers.
/// Coordinates are clipped into the unit cube.
Dataset generate(const SyntheticSpec& spec);

SyntheticKind synthetic_kind_from_string(const std::string& name);
const char* to_string(SyntheticKind kind) noexcept;

}  // namespace gridscan

#endif  // GRIDSCAN_SYNTHETIC_HPP
