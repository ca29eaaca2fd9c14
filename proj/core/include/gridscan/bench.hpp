#ifndef GRIDSCAN_BENCH_HPP
#define GRIDSCAN_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gridscan/scan.hpp"

namespace gridscan {

/// One timed run of a method on one dataset size. detail carries the final
/// grid resolution for scan and the axis count for pca.
struct BenchRecord {
  std::string method;
  std::size_t points = 0;
  std::uint32_t dim = 0;
  double millis = 0.0;
  std::uint32_t detail = 0;
  unsigned threads = 1;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::uint32_t dim = 2;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint32_t pca_axes = 2;
  ScanConfig config{};
};

/// Times scan and pca_fit on the same seeded sine-curve datasets, one pair
/// of records per size. Sizes must be ascending. Runs are single-threaded
/// unless options.threads says otherwise; the thread count is recorded in
/// every record.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// CSV table "method,J,N,millis", one row per record.
std::string bench_to_csv(const std::vector<BenchRecord>& records);

}  // namespace gridscan

#endif  // GRIDSCAN_BENCH_HPP
