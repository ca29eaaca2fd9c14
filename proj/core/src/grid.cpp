#include "gridscan/grid.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "gridscan/error.hpp"

namespace gridscan {

namespace {

constexpr double kDomainTolerance = 1e-12;

}  // namespace

double GridResolution::cell_count() const noexcept {
  double total = 1.0;
  for (std::uint32_t i = 0; i < dim; ++i) {
    total *= static_cast<double>(cells_per_axis);
  }
  return total;
}

namespace {

/// Allocation-free core of cell_of; `index` must already have size dim.
void cell_of_into(std::span<const double> point, const GridResolution& res,
                  CellIndex& index) {
  const double a = static_cast<double>(res.cells_per_axis);
  for (std::size_t i = 0; i < point.size(); ++i) {
    const double c = point[i];
    if (!(c >= -kDomainTolerance && c <= 1.0 + kDomainTolerance)) {
      throw Error(ErrorCode::out_of_domain,
                  "coordinate " + std::to_string(c) + " outside [0,1]");
    }
    const double clamped = c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c);
    auto k = static_cast<std::uint32_t>(clamped * a);
    // Half-open cells; the top face 1.0 lands in the last cell.
    if (k >= res.cells_per_axis) k = res.cells_per_axis - 1;
    index[i] = k;
  }
}

}  // namespace

CellIndex cell_of(std::span<const double> point, const GridResolution& res) {
  if (point.size() != res.dim) {
    throw Error(ErrorCode::dimension_mismatch,
                "point dimension does not match the grid");
  }
  CellIndex index(res.dim);
  cell_of_into(point, res, index);
  return index;
}

std::vector<double> cell_center(const CellIndex& index,
                                const GridResolution& res) {
  if (index.size() != res.dim) {
    throw Error(ErrorCode::invalid_index,
                "cell index dimension does not match the grid");
  }
  std::vector<double> center(res.dim);
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= res.cells_per_axis) {
      throw Error(ErrorCode::invalid_index,
                  "cell coordinate " + std::to_string(index[i]) +
                      " out of range for resolution " +
                      std::to_string(res.cells_per_axis));
    }
    center[i] = (static_cast<double>(index[i]) + 0.5) /
                static_cast<double>(res.cells_per_axis);
  }
  return center;
}

std::size_t CellHistogram::total_points() const noexcept {
  std::size_t total = 0;
  for (const auto& [index, members] : cells) {
    total += members.size();
  }
  return total;
}

namespace {

using CellMap =
    std::unordered_map<CellIndex, std::vector<std::uint32_t>, CellIndexHash>;

CellMap bin_range(const Dataset& dataset, const GridResolution& res,
                  std::size_t begin, std::size_t end) {
  CellMap map;
  CellIndex scratch(res.dim);
  for (std::size_t j = begin; j < end; ++j) {
    cell_of_into(dataset.point(j), res, scratch);
    auto it = map.find(scratch);
    if (it == map.end()) {
      it = map.emplace(scratch, std::vector<std::uint32_t>{}).first;
    }
    it->second.push_back(static_cast<std::uint32_t>(j));
  }
  return map;
}

}  // namespace

CellHistogram build_histogram(const Dataset& dataset,
                              const GridResolution& res, unsigned threads) {
  if (res.cells_per_axis == 0) {
    throw Error(ErrorCode::invalid_argument,
                "grid needs at least one cell per axis");
  }
  if (res.dim != dataset.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "grid dimension does not match the dataset");
  }

  CellHistogram histogram;
  histogram.resolution = res;

  if (threads <= 1 || dataset.size() < 2 * threads) {
    histogram.cells = bin_range(dataset, res, 0, dataset.size());
    return histogram;
  }

  // Partition the points into contiguous chunks and merge the partial maps
  // in chunk order, so member lists come out in ascending point id exactly
  // as sequential counting would produce them.
  const std::size_t chunk = (dataset.size() + threads - 1) / threads;
  std::vector<CellMap> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min<std::size_t>(t * chunk, dataset.size());
    const std::size_t end =
        std::min<std::size_t>(begin + chunk, dataset.size());
    workers.emplace_back([&dataset, &res, &partial, t, begin, end] {
      partial[t] = bin_range(dataset, res, begin, end);
    });
  }
  for (auto& w : workers) w.join();

  for (auto& map : partial) {
    for (auto& [index, members] : map) {
      auto& target = histogram.cells[index];
      target.insert(target.end(), members.begin(), members.end());
    }
  }
  return histogram;
}

}  // namespace gridscan
