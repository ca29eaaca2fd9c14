#include "gridscan/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridscan/error.hpp"

namespace gridscan {

namespace {

double squared_distance(const std::vector<double>& a,
                        const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double squared_norm(const std::vector<double>& a) {
  double sum = 0.0;
  for (double c : a) sum += c * c;
  return sum;
}

/// Kept cells in lexicographic index order, regardless of input order.
std::vector<const KeptCell*> sorted_cells(const KeptCells& kept) {
  std::vector<const KeptCell*> cells;
  cells.reserve(kept.cells.size());
  for (const auto& cell : kept.cells) cells.push_back(&cell);
  std::sort(cells.begin(), cells.end(),
            [](const KeptCell* a, const KeptCell* b) {
              return a->index < b->index;
            });
  return cells;
}

/// Greedy walk over the centers. Candidates are scanned in lexicographic
/// index order with a strict comparison, so the smallest index wins exact
/// distance ties. When tie_tolerance is positive, steps whose minimum is
/// attained by two or more candidates within that tolerance are counted.
std::vector<std::size_t> greedy_order(
    const std::vector<const KeptCell*>& cells, double tie_tolerance,
    std::size_t* tied_steps) {
  const std::size_t count = cells.size();
  std::vector<bool> visited(count, false);
  std::vector<std::size_t> order;
  order.reserve(count);

  // Start at the center closest to the origin.
  std::size_t current = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const double d = squared_norm(cells[i]->center);
    if (d < best) {
      best = d;
      current = i;
    }
  }
  visited[current] = true;
  order.push_back(current);

  for (std::size_t step = 1; step < count; ++step) {
    std::size_t next = count;
    best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
      if (visited[i]) continue;
      const double d =
          squared_distance(cells[current]->center, cells[i]->center);
      if (d < best) {
        best = d;
        next = i;
      }
    }
    if (tied_steps != nullptr) {
      const double min_dist = std::sqrt(best);
      std::size_t at_minimum = 0;
      for (std::size_t i = 0; i < count; ++i) {
        if (visited[i]) continue;
        const double d = std::sqrt(
            squared_distance(cells[current]->center, cells[i]->center));
        if (d - min_dist <= tie_tolerance) ++at_minimum;
      }
      if (at_minimum >= 2) ++(*tied_steps);
    }
    visited[next] = true;
    order.push_back(next);
    current = next;
  }
  return order;
}

}  // namespace

Chain build_chain(const KeptCells& kept) {
  if (kept.cells.empty()) {
    throw Error(ErrorCode::no_cells_kept, "cannot chain zero kept cells");
  }
  const auto cells = sorted_cells(kept);
  const auto order = greedy_order(cells, 0.0, nullptr);

  Chain chain;
  chain.vertices.reserve(order.size());
  chain.sources.reserve(order.size());
  for (std::size_t i : order) {
    chain.vertices.push_back(cells[i]->center);
    chain.sources.push_back(cells[i]->index);
  }
  return chain;
}

PiecewiseLinearManifold build_manifold(const Chain& chain, std::uint32_t s) {
  if (s < 1) {
    throw Error(ErrorCode::invalid_dimension,
                "manifold dimension must be >= 1");
  }
  PiecewiseLinearManifold manifold;
  manifold.dim = s;
  const std::size_t length = chain.length();
  if (length > s) {
    manifold.simplices.reserve(length - s);
    for (std::size_t k = 0; k + s < length; ++k) {
      std::vector<std::uint32_t> simplex(s + 1);
      for (std::uint32_t v = 0; v <= s; ++v) {
        simplex[v] = static_cast<std::uint32_t>(k) + v;
      }
      manifold.simplices.push_back(std::move(simplex));
    }
  }
  return manifold;
}

std::size_t count_tied_steps(const KeptCells& kept, double tolerance) {
  if (kept.cells.empty()) {
    throw Error(ErrorCode::no_cells_kept, "cannot chain zero kept cells");
  }
  const auto cells = sorted_cells(kept);
  std::size_t ties = 0;
  greedy_order(cells, tolerance, &ties);
  return ties;
}

}  // namespace gridscan
