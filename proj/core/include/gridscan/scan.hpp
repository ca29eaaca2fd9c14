#ifndef GRIDSCAN_SCAN_HPP
#define GRIDSCAN_SCAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gridscan/dataset.hpp"
#include "gridscan/grid.hpp"

namespace gridscan {

/// Minimum number of points a cell must hold to be kept, given either as a
/// fraction of the dataset size or as an absolute count.
struct DensityThreshold {
  enum class Kind { fraction, absolute };

  Kind kind = Kind::fraction;
  double fraction = 0.005;
  std::uint32_t absolute = 1;

  static DensityThreshold from_fraction(double f) {
    DensityThreshold d;
    d.kind = Kind::fraction;
    d.fraction = f;
    return d;
  }

  static DensityThreshold from_absolute(std::uint32_t p) {
    DensityThreshold d;
    d.kind = Kind::absolute;
    d.absolute = p;
    return d;
  }
};

/// Largest admissible grid resolution. `full` allows cells_per_axis up to
/// floor(J^(1/N)); `half` caps at floor(J^(1/(2N))), trading resolution for
/// speed on large datasets.
enum class ResolutionCapPolicy { full, half };

struct ScanConfig {
  /// Upper limit V on the total volume of the kept cells.
  double volume_limit = 0.4;
  /// Fraction of the dataset that must fall inside the kept cells; the
  /// absolute lower limit L is the ceiling of coverage_fraction * J.
  double coverage_fraction = 0.9;
  DensityThreshold density{};
  ResolutionCapPolicy cap_policy = ResolutionCapPolicy::full;
  /// First resolution of the doubling schedule.
  std::uint32_t start_resolution = 2;

  /// Throws Error(invalid_argument) when a field is out of range.
  void validate() const;
};

/// One kept cell: its grid index, its center and the number of dataset
/// points it contains.
struct KeptCell {
  CellIndex index;
  std::vector<double> center;
  std::uint32_t count = 0;
};

/// The cells surviving the density filter at one resolution, sorted
/// lexicographically by cell index. The total volume is the exact ratio
/// K / cells_per_axis^dim, reported as a double.
struct KeptCells {
  GridResolution resolution;
  std::vector<KeptCell> cells;
  /// The integer threshold the cells were filtered with; every count is >= it.
  std::uint32_t filter_threshold = 1;

  [[nodiscard]] std::size_t kept_count() const noexcept { return cells.size(); }
  [[nodiscard]] std::size_t covered() const noexcept;
  [[nodiscard]] double total_volume() const noexcept;
};

enum class NotFoundReason {
  empty_after_filter,
  resolution_cap_exceeded,
  coverage_too_low,
};

/// Per-iteration record of the scan loop.
struct TraceEntry {
  std::uint32_t resolution = 0;
  std::size_t occupied_cells = 0;
  std::size_t kept_cells = 0;
  double total_volume = 0.0;
  std::size_t covered = 0;
};

/// Result of a scan: either the kept cells of the successful resolution or
/// the reason no manifold region was found. The trace lists every resolution
/// visited, in doubling order.
struct ScanOutcome {
  std::optional<KeptCells> kept;
  std::optional<NotFoundReason> reason;
  std::vector<TraceEntry> trace;

  [[nodiscard]] bool found() const noexcept { return kept.has_value(); }
};

/// Integer density threshold for a dataset of J points. A fractional
/// threshold f resolves to the smallest integer strictly greater than f*J,
/// except that an exact integer product stays as is; the result is at least
/// 1. An absolute threshold passes through unchanged.
std::uint32_t effective_p(const ScanConfig& config, std::size_t point_count);

/// Absolute coverage lower limit L = ceil(coverage_fraction * J), with exact
/// integer products kept as is.
std::size_t coverage_threshold(const ScanConfig& config,
                               std::size_t point_count);

/// Keeps exactly the cells with count >= p. The result is sorted by cell
/// index; an empty result is legal.
KeptCells filter_cells(const CellHistogram& histogram, std::uint32_t p);

/// Largest admissible cells_per_axis for the policy: the greatest integer a
/// with a^N <= J (full) or a^(2N) <= J (half). Computed with overflow-checked
/// integer powering, so there is no float drift at perfect powers.
std::uint32_t resolution_cap(const ScanConfig& config, std::size_t point_count,
                             std::uint32_t dim);

/// The adaptive doubling loop. Starting from config.start_resolution, each
/// iteration bins the dataset, drops the cells below the density threshold
/// and tests the survivors:
///
///   - no cell survives                -> NotFound(empty_after_filter)
///   - total volume >= volume_limit   -> double the resolution; when that
///     exceeds resolution_cap          -> NotFound(resolution_cap_exceeded)
///   - volume ok but too few points   -> NotFound(coverage_too_low)
///   - volume ok and enough points    -> Found
///
/// Equality with the volume limit counts as "too big" (Found requires a
/// strictly smaller total volume). The loop runs at most
/// ceil(log2(resolution_cap)) + 1 iterations and records each one in the
/// trace. histogram_threads is forwarded to build_histogram.
ScanOutcome scan(const Dataset& dataset, const ScanConfig& config,
                 unsigned histogram_threads = 1);

const char* to_string(NotFoundReason reason) noexcept;

}  // namespace gridscan

#endif  // GRIDSCAN_SCAN_HPP
