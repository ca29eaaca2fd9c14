#include "gridscan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "gridscan/error.hpp"
#include "gridscan/pca.hpp"
#include "gridscan/synthetic.hpp"

namespace gridscan {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) {
    throw Error(ErrorCode::invalid_argument, "no sizes to benchmark");
  }
  for (std::size_t i = 1; i < options.sizes.size(); ++i) {
    if (options.sizes[i] < options.sizes[i - 1]) {
      throw Error(ErrorCode::invalid_argument,
                  "benchmark sizes must be ascending");
    }
  }
  options.config.validate();

  std::vector<BenchRecord> records;
  records.reserve(2 * options.sizes.size());

  for (std::size_t size : options.sizes) {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::sine_curve;
    spec.points = size;
    spec.dim = options.dim;
    spec.outlier_fraction = 0.05;
    // Vary the stream per size so datasets are independent draws.
    spec.seed = options.seed + size;
    const Dataset dataset = generate(spec);

    {
      const auto start = std::chrono::steady_clock::now();
      const ScanOutcome outcome =
          scan(dataset, options.config, options.threads);
      const double ms = elapsed_ms(start);
      const std::uint32_t final_res =
          outcome.trace.empty() ? 0 : outcome.trace.back().resolution;
      records.push_back(BenchRecord{"scan", size, options.dim, ms, final_res,
                                    options.threads});
    }
    {
      const std::uint32_t axes =
          std::min<std::uint32_t>(options.pca_axes, options.dim);
      const auto start = std::chrono::steady_clock::now();
      const PrincipalAxes fitted = pca_fit(dataset, axes);
      const double ms = elapsed_ms(start);
      records.push_back(BenchRecord{
          "pca", size, options.dim, ms,
          static_cast<std::uint32_t>(fitted.axes.size()), options.threads});
    }
  }
  return records;
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "method,J,N,millis\n";
  for (const auto& r : records) {
    char millis[32];
    std::snprintf(millis, sizeof(millis), "%.3f", r.millis);
    out << r.method << ',' << r.points << ',' << r.dim << ',' << millis
        << '\n';
  }
  return out.str();
}

}  // namespace gridscan
