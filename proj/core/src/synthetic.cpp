#include "gridscan/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "gridscan/error.hpp"
#include "gridscan/rng.hpp"

namespace gridscan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kJitterSigma = 0.01;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void push_uniform(std::vector<double>& coords, std::uint32_t dim, Rng& rng) {
  for (std::uint32_t i = 0; i < dim; ++i) coords.push_back(rng.uniform01());
}

/// Point on the fixed sine arc: first coordinate runs along t, the others
/// swing around 0.5 with phase-shifted sines so the curve stays
/// one-dimensional in any ambient dimension.
void push_curve_point(std::vector<double>& coords, std::uint32_t dim, double t,
                      Rng& rng) {
  coords.push_back(clamp01(t + kJitterSigma * rng.normal()));
  for (std::uint32_t k = 1; k < dim; ++k) {
    const double phase = (k - 1) * (kTwoPi / 8.0);
    const double value = 0.5 + 0.35 * std::sin(kTwoPi * t + phase);
    coords.push_back(clamp01(value + kJitterSigma * rng.normal()));
  }
}

void push_gaussian_blob(std::vector<double>& coords, std::uint32_t dim,
                        double center, double sigma, Rng& rng) {
  for (std::uint32_t i = 0; i < dim; ++i) {
    coords.push_back(clamp01(center + sigma * rng.normal()));
  }
}

}  // namespace

Dataset generate(const SyntheticSpec& spec) {
  if (spec.points < 1) {
    throw Error(ErrorCode::invalid_argument, "need at least one point");
  }
  if (spec.dim < 1) {
    throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
  }
  if (!(spec.outlier_fraction >= 0.0 && spec.outlier_fraction < 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "outlier fraction must lie in [0, 1)");
  }

  Rng rng(spec.seed);
  const auto outliers = static_cast<std::size_t>(
      spec.outlier_fraction * static_cast<double>(spec.points) + 1e-9);
  const std::size_t structured = spec.points - outliers;

  std::vector<double> coords;
  coords.reserve(spec.points * spec.dim);

  switch (spec.kind) {
    case SyntheticKind::diagonal: {
      for (std::size_t i = 0; i < spec.points; ++i) {
        const double t = spec.points > 1
                             ? static_cast<double>(i) /
                                   static_cast<double>(spec.points - 1)
                             : 0.5;
        for (std::uint32_t k = 0; k < spec.dim; ++k) coords.push_back(t);
      }
      break;
    }
    case SyntheticKind::sine_curve: {
      for (std::size_t i = 0; i < structured; ++i) {
        const double t = structured > 1
                             ? static_cast<double>(i) /
                                   static_cast<double>(structured - 1)
                             : 0.5;
        push_curve_point(coords, spec.dim, t, rng);
      }
      for (std::size_t i = 0; i < outliers; ++i) {
        push_uniform(coords, spec.dim, rng);
      }
      break;
    }
    case SyntheticKind::uniform: {
      for (std::size_t i = 0; i < spec.points; ++i) {
        push_uniform(coords, spec.dim, rng);
      }
      break;
    }
    case SyntheticKind::two_clusters: {
      const std::size_t first = (structured + 1) / 2;
      for (std::size_t i = 0; i < structured; ++i) {
        push_gaussian_blob(coords, spec.dim, i < first ? 0.3 : 0.7, 0.05, rng);
      }
      for (std::size_t i = 0; i < outliers; ++i) {
        push_uniform(coords, spec.dim, rng);
      }
      break;
    }
  }

  return Dataset(std::move(coords), spec.dim);
}

SyntheticKind synthetic_kind_from_string(const std::string& name) {
  if (name == "diagonal") return SyntheticKind::diagonal;
  if (name == "sine-curve") return SyntheticKind::sine_curve;
  if (name == "uniform") return SyntheticKind::uniform;
  if (name == "two-clusters") return SyntheticKind::two_clusters;
  throw Error(ErrorCode::invalid_argument,
              "unknown synthetic kind: " + name);
}

const char* to_string(SyntheticKind kind) noexcept {
  switch (kind) {
    case SyntheticKind::diagonal: return "diagonal";
    case SyntheticKind::sine_curve: return "sine-curve";
    case SyntheticKind::uniform: return "uniform";
    case SyntheticKind::two_clusters: return "two-clusters";
  }
  return "unknown";
}

}  // namespace gridscan
