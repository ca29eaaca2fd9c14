#ifndef GRIDSCAN_MANIFOLD_HPP
#define GRIDSCAN_MANIFOLD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gridscan/grid.hpp"
#include "gridscan/scan.hpp"

namespace gridscan {

/// Ordered walk through the kept-cell centers. Visits every kept cell
/// exactly once; vertex 0 is the center closest to the origin.
struct Chain {
  std::vector<std::vector<double>> vertices;
  std::vector<CellIndex> sources;

  [[nodiscard]] std::size_t length() const noexcept { return vertices.size(); }
};

/// Piecewise-linear manifold of intrinsic dimension s over a chain: the
/// simplices are windows of s+1 consecutive chain vertices (edges for s=1,
/// triangles for s=2), so there are max(K-s, 0) of them. Vertex numbers are
/// 0-based indices into the chain.
struct PiecewiseLinearManifold {
  std::uint32_t dim = 1;
  std::vector<std::vector<std::uint32_t>> simplices;
};

/// Greedy nearest-neighbor ordering of the kept-cell centers, started from
/// the center closest to the origin. Distance ties are broken by the
/// lexicographically smallest cell index, which makes the result independent
/// of the input order. Throws Error(no_cells_kept) when there are no cells.
Chain build_chain(const KeptCells& kept);

/// Sliding-window simplices of dimension s over the chain. When the chain
/// has at most s vertices the simplex list is empty and the manifold
/// degenerates to the chain itself. Throws Error(invalid_dimension) for
/// s < 1.
PiecewiseLinearManifold build_manifold(const Chain& chain, std::uint32_t s);

/// Diagnostic for the non-uniqueness of the greedy walk: the number of steps
/// at which two or more unvisited centers attain the minimal distance within
/// the tolerance. The chain itself stays the deterministic tie-broken one.
std::size_t count_tied_steps(const KeptCells& kept, double tolerance = 1e-12);

}  // namespace gridscan

#endif  // GRIDSCAN_MANIFOLD_HPP
