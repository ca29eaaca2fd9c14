#ifndef GRIDSCAN_GRID_HPP
#define GRIDSCAN_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "gridscan/dataset.hpp"

namespace gridscan {

/// Uniform grid over the unit cube: `cells_per_axis` intervals per axis,
/// cell side 1/cells_per_axis. The total cell count cells_per_axis^dim is
/// never materialized densely; it can be astronomically large.
struct GridResolution {
  std::uint32_t cells_per_axis = 2;
  std::uint32_t dim = 2;

  [[nodiscard]] double cell_side() const noexcept {
    return 1.0 / static_cast<double>(cells_per_axis);
  }

  /// cells_per_axis^dim as a double (+inf when it overflows). Exact as long
  /// as the true value stays below 2^53.
  [[nodiscard]] double cell_count() const noexcept;
};

/// Integer grid coordinates of one cell, each in [0, cells_per_axis - 1].
using CellIndex = std::vector<std::uint32_t>;

struct CellIndexHash {
  std::size_t operator()(const CellIndex& index) const noexcept {
    // FNV-1a over the coordinate words.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t c : index) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Cell containing a point of the unit cube. Cells are half-open
/// [k/a, (k+1)/a) per axis; coordinate 1.0 is clamped into the last cell so
/// the map is total on [0,1]^N. Coordinates outside [0,1] beyond a 1e-12
/// tolerance raise Error(out_of_domain).
CellIndex cell_of(std::span<const double> point, const GridResolution& res);

/// Center of a cell: coordinate i equals (index_i + 0.5) / cells_per_axis.
/// Throws Error(invalid_index) when the index does not match the resolution.
std::vector<double> cell_center(const CellIndex& index,
                                const GridResolution& res);

/// Sparse occupancy histogram at one resolution. Only occupied cells are
/// stored; each entry keeps the ids of its member points, so the count of a
/// cell is the size of its member list.
struct CellHistogram {
  GridResolution resolution;
  std::unordered_map<CellIndex, std::vector<std::uint32_t>, CellIndexHash>
      cells;

  [[nodiscard]] std::size_t occupied() const noexcept { return cells.size(); }
  [[nodiscard]] std::size_t total_points() const noexcept;
};

/// Bins every dataset point into its cell. Cost O(J * N), independent of the
/// total cell count. With threads > 1 the point list is partitioned across
/// workers and the partial sparse counts are merged in chunk order; the
/// result is identical to the sequential one.
CellHistogram build_histogram(const Dataset& dataset, const GridResolution& res,
                              unsigned threads = 1);

}  // namespace gridscan

#endif  // GRIDSCAN_GRID_HPP
