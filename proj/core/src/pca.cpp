#include "gridscan/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridscan/error.hpp"
#include "gridscan/rng.hpp"

namespace gridscan {

namespace {

constexpr double kAxisTolerance = 1e-10;
constexpr int kMaxIterations = 1000;

std::vector<double> mat_vec(const std::vector<double>& m, std::size_t n,
                            const std::vector<double>& v) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sum += m[i * n + j] * v[j];
    }
    out[i] = sum;
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void subtract_projection(std::vector<double>& v,
                         const std::vector<double>& axis) {
  const double c = dot(v, axis);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * axis[i];
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

}  // namespace

PrincipalAxes pca_fit(const Dataset& dataset, std::uint32_t s) {
  const std::size_t n = dataset.dim();
  const std::size_t count = dataset.size();
  if (count < 2) {
    throw Error(ErrorCode::invalid_argument, "pca needs at least two points");
  }
  if (s < 1 || s > n) {
    throw Error(ErrorCode::invalid_argument,
                "axis count must lie in [1, dim]");
  }

  PrincipalAxes result;
  result.mean.assign(n, 0.0);
  for (std::size_t j = 0; j < count; ++j) {
    const auto p = dataset.point(j);
    for (std::size_t i = 0; i < n; ++i) result.mean[i] += p[i];
  }
  for (double& m : result.mean) m /= static_cast<double>(count);

  // Sample covariance, divisor J - 1.
  std::vector<double> cov(n * n, 0.0);
  std::vector<double> centered(n);
  for (std::size_t j = 0; j < count; ++j) {
    const auto p = dataset.point(j);
    for (std::size_t i = 0; i < n; ++i) centered[i] = p[i] - result.mean[i];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) {
        cov[r * n + c] += centered[r] * centered[c];
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      cov[r * n + c] /= static_cast<double>(count - 1);
      cov[c * n + r] = cov[r * n + c];
    }
  }

  double total_variance = 0.0;
  for (std::size_t i = 0; i < n; ++i) total_variance += cov[i * n + i];
  if (total_variance <= 0.0) {
    throw Error(ErrorCode::degenerate_covariance,
                "dataset has zero variance");
  }

  // Deterministic start vectors; the fixed seed keeps runs reproducible.
  Rng rng(0x9e3779b97f4a7c15ull);

  for (std::uint32_t axis_i = 0; axis_i < s; ++axis_i) {
    std::vector<double> v(n);
    double v_norm = 0.0;
    do {
      for (double& c : v) c = rng.uniform(-1.0, 1.0);
      for (const auto& prev : result.axes) subtract_projection(v, prev);
      v_norm = norm(v);
    } while (v_norm < 1e-8);
    for (double& c : v) c /= v_norm;

    double eigenvalue = 0.0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      std::vector<double> w = mat_vec(cov, n, v);
      for (const auto& prev : result.axes) subtract_projection(w, prev);
      const double w_norm = norm(w);
      if (w_norm < 1e-30) {
        // Remaining subspace is null; the current orthonormal v is as good
        // an axis as any, with variance ~0.
        break;
      }
      for (double& c : w) c /= w_norm;
      if (dot(w, v) < 0.0) {
        for (double& c : w) c = -c;
      }
      double change = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = w[i] - v[i];
        change += d * d;
      }
      v = std::move(w);
      if (std::sqrt(change) < kAxisTolerance) break;
    }
    eigenvalue = dot(v, mat_vec(cov, n, v));
    result.axes.push_back(std::move(v));
    result.variances.push_back(eigenvalue);
  }

  // Deflation already yields a descending tendency; enforce it exactly.
  std::vector<std::size_t> perm(result.axes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return result.variances[a] > result.variances[b];
  });
  PrincipalAxes sorted;
  sorted.mean = std::move(result.mean);
  for (std::size_t i : perm) {
    sorted.axes.push_back(std::move(result.axes[i]));
    sorted.variances.push_back(result.variances[i]);
  }
  return sorted;
}

std::vector<double> project(const PrincipalAxes& axes,
                            std::span<const double> point) {
  std::vector<double> out(axes.axes.size(), 0.0);
  for (std::size_t k = 0; k < axes.axes.size(); ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < axes.mean.size(); ++i) {
      sum += axes.axes[k][i] * (point[i] - axes.mean[i]);
    }
    out[k] = sum;
  }
  return out;
}

}  // namespace gridscan
