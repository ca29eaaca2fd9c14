#ifndef GRIDSCAN_REPORT_HPP
#define GRIDSCAN_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "gridscan/manifold.hpp"
#include "gridscan/scan.hpp"

namespace gridscan {

struct PhaseTimings {
  double normalize_ms = 0.0;
  double scan_ms = 0.0;
  double manifold_ms = 0.0;
  double total_ms = 0.0;
};

/// Everything one scan run produced: the configuration echo, the outcome
/// with its trace and kept cells, the manifold when one was built, and the
/// per-phase timings. Serializes to the JSON schema documented in the
/// README (fixed key order, floats at 17 significant digits) and parses
/// back losslessly.
struct RunReport {
  std::uint32_t schema_version = 1;
  ScanConfig config{};
  std::uint32_t manifold_dim = 1;
  std::size_t dataset_points = 0;
  std::uint32_t dataset_dim = 0;
  ScanOutcome outcome{};
  std::optional<Chain> chain;
  std::optional<PiecewiseLinearManifold> manifold;
  PhaseTimings timings{};
};

/// Byte-stable serialization: same report, same bytes.
std::string report_to_json(const RunReport& report);

/// Writes report_to_json to disk; throws Error(io_error) when the path is
/// not writable.
void emit_report(const RunReport& report, const std::string& path);

RunReport parse_report_json(const std::string& text);
RunReport load_report(const std::string& path);

}  // namespace gridscan

#endif  // GRIDSCAN_REPORT_HPP
