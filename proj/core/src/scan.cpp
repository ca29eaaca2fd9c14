#include "gridscan/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gridscan/error.hpp"

namespace gridscan {

namespace {

/// Ceiling with a guard against float noise: products that are integers up
/// to 1e-9 relative error count as exact and are not bumped up.
std::uint64_t ceil_counted(double x) {
  if (x <= 0.0) return 0;
  const double rounded = std::nearbyint(x);
  if (std::abs(x - rounded) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<std::uint64_t>(rounded);
  }
  return static_cast<std::uint64_t>(std::ceil(x));
}

/// True when base^exp <= limit, evaluated in integers with early exit
/// instead of overflow.
bool pow_within(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  if (base <= 1) return base <= limit;
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (acc > limit / base) return false;
    acc *= base;
    if (acc > limit) return false;
  }
  return true;
}

/// floor(limit^(1/exp)) by float estimate plus integer correction.
std::uint32_t integer_root(std::uint64_t limit, std::uint32_t exp) {
  if (limit == 0) return 0;
  auto candidate = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(limit), 1.0 / static_cast<double>(exp)));
  candidate += 2;
  while (candidate > 1 && !pow_within(candidate, exp, limit)) {
    --candidate;
  }
  while (pow_within(candidate + 1, exp, limit)) {
    ++candidate;
  }
  return static_cast<std::uint32_t>(candidate);
}

}  // namespace

void ScanConfig::validate() const {
  if (!(volume_limit > 0.0 && volume_limit <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "volume limit must lie in (0, 1]");
  }
  if (!(coverage_fraction > 0.0 && coverage_fraction <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "coverage fraction must lie in (0, 1]");
  }
  if (density.kind == DensityThreshold::Kind::fraction) {
    if (!(density.fraction > 0.0 && density.fraction < 1.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "density fraction must lie in (0, 1)");
    }
  } else if (density.absolute < 1) {
    throw Error(ErrorCode::invalid_argument,
                "absolute density threshold must be >= 1");
  }
  if (start_resolution < 2) {
    throw Error(ErrorCode::invalid_argument, "start resolution must be >= 2");
  }
}

std::size_t KeptCells::covered() const noexcept {
  std::size_t total = 0;
  for (const auto& cell : cells) total += cell.count;
  return total;
}

double KeptCells::total_volume() const noexcept {
  return static_cast<double>(cells.size()) / resolution.cell_count();
}

std::uint32_t effective_p(const ScanConfig& config, std::size_t point_count) {
  if (config.density.kind == DensityThreshold::Kind::absolute) {
    return config.density.absolute;
  }
  const std::uint64_t p =
      ceil_counted(config.density.fraction * static_cast<double>(point_count));
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(p, 1));
}

std::size_t coverage_threshold(const ScanConfig& config,
                               std::size_t point_count) {
  return static_cast<std::size_t>(ceil_counted(
      config.coverage_fraction * static_cast<double>(point_count)));
}

KeptCells filter_cells(const CellHistogram& histogram, std::uint32_t p) {
  if (p < 1) {
    throw Error(ErrorCode::invalid_argument,
                "density threshold must be >= 1");
  }
  KeptCells kept;
  kept.resolution = histogram.resolution;
  kept.filter_threshold = p;
  for (const auto& [index, members] : histogram.cells) {
    if (members.size() >= p) {
      kept.cells.push_back(KeptCell{
          index, cell_center(index, histogram.resolution),
          static_cast<std::uint32_t>(members.size())});
    }
  }
  std::sort(kept.cells.begin(), kept.cells.end(),
            [](const KeptCell& a, const KeptCell& b) {
              return a.index < b.index;
            });
  return kept;
}

std::uint32_t resolution_cap(const ScanConfig& config, std::size_t point_count,
                             std::uint32_t dim) {
  if (point_count < 1 || dim < 1) {
    throw Error(ErrorCode::invalid_argument,
                "resolution cap needs J >= 1 and N >= 1");
  }
  const std::uint32_t exponent =
      config.cap_policy == ResolutionCapPolicy::full ? dim : 2 * dim;
  return integer_root(point_count, exponent);
}

ScanOutcome scan(const Dataset& dataset, const ScanConfig& config,
                 unsigned histogram_threads) {
  config.validate();

  const std::uint32_t p = effective_p(config, dataset.size());
  const std::size_t coverage_limit = coverage_threshold(config, dataset.size());
  const std::uint32_t cap = resolution_cap(config, dataset.size(), dataset.dim());

  ScanOutcome outcome;
  std::uint32_t a = config.start_resolution;
  while (true) {
    const GridResolution res{a, dataset.dim()};
    const CellHistogram histogram =
        build_histogram(dataset, res, histogram_threads);
    KeptCells kept = filter_cells(histogram, p);

    outcome.trace.push_back(TraceEntry{a, histogram.occupied(),
                                       kept.kept_count(), kept.total_volume(),
                                       kept.covered()});

    if (kept.kept_count() == 0) {
      outcome.reason = NotFoundReason::empty_after_filter;
      return outcome;
    }
    if (kept.total_volume() >= config.volume_limit) {
      // The cap is tested on the doubled resolution only; the start
      // resolution itself always gets its one iteration.
      if (a > std::numeric_limits<std::uint32_t>::max() / 2 ||
          2 * a > cap) {
        outcome.reason = NotFoundReason::resolution_cap_exceeded;
        return outcome;
      }
      a *= 2;
      continue;
    }
    if (kept.covered() < coverage_limit) {
      outcome.reason = NotFoundReason::coverage_too_low;
      return outcome;
    }
    outcome.kept = std::move(kept);
    return outcome;
  }
}

const char* to_string(NotFoundReason reason) noexcept {
  switch (reason) {
    case NotFoundReason::empty_after_filter: return "empty-after-filter";
    case NotFoundReason::resolution_cap_exceeded:
      return "resolution-cap-exceeded";
    case NotFoundReason::coverage_too_low: return "coverage-too-low";
  }
  return "unknown";
}

}  // namespace gridscan
