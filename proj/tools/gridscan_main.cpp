// Command-line front end: scan a point cloud for a low-dimensional region,
// generate synthetic datasets, benchmark against the PCA baseline, and
// re-render figures from saved reports.
//
// Exit codes: 0 = success (scan: manifold found), 3 = scan finished with no
// manifold, 1 = usage error, 2 = data error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridscan/bench.hpp"
#include "gridscan/dataset.hpp"
#include "gridscan/error.hpp"
#include "gridscan/manifold.hpp"
#include "gridscan/plot.hpp"
#include "gridscan/point_io.hpp"
#include "gridscan/report.hpp"
#include "gridscan/scan.hpp"
#include "gridscan/synthetic.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNotFound = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct IoOptions {
  std::string input;
  std::string format;  // "", "csv" or "json"
  bool no_header = false;
};

void add_input_flags(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--input", io.input, "point cloud file")->required();
  cmd->add_option("--format", io.format, "input format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--no-header", io.no_header,
                "treat the first CSV row as data, never as a header");
}

std::vector<std::vector<double>> read_points(const IoOptions& io) {
  gridscan::PointFormat format = io.format.empty()
                                     ? gridscan::format_from_path(io.input)
                                     : (io.format == "json"
                                            ? gridscan::PointFormat::json
                                            : gridscan::PointFormat::csv);
  return gridscan::load_points(io.input, format, io.no_header);
}

struct ScanFlags {
  IoOptions io;
  double volume_limit = 0.4;
  double coverage = 0.9;
  std::optional<double> density_fraction;
  std::optional<std::uint32_t> density_abs;
  std::string cap_policy = "full";
  std::uint32_t a_start = 2;
  std::uint32_t manifold_dim = 1;
  std::string report_path;
  std::string plot_path;
  unsigned threads = 1;
  bool deterministic = false;
};

gridscan::ScanConfig to_config(const ScanFlags& flags) {
  gridscan::ScanConfig config;
  config.volume_limit = flags.volume_limit;
  config.coverage_fraction = flags.coverage;
  if (flags.density_abs.has_value()) {
    config.density = gridscan::DensityThreshold::from_absolute(*flags.density_abs);
  } else if (flags.density_fraction.has_value()) {
    config.density =
        gridscan::DensityThreshold::from_fraction(*flags.density_fraction);
  }
  config.cap_policy = flags.cap_policy == "half"
                          ? gridscan::ResolutionCapPolicy::half
                          : gridscan::ResolutionCapPolicy::full;
  config.start_resolution = flags.a_start;
  return config;
}

int run_scan(const ScanFlags& flags) {
  const auto t_total = Clock::now();

  const auto raw = read_points(flags.io);

  const auto t_norm = Clock::now();
  auto [dataset, transform] = gridscan::normalize_to_unit_cube(raw);
  gridscan::PhaseTimings timings;
  timings.normalize_ms = ms_since(t_norm);

  const gridscan::ScanConfig config = to_config(flags);
  const auto t_scan = Clock::now();
  gridscan::ScanOutcome outcome = gridscan::scan(dataset, config, flags.threads);
  timings.scan_ms = ms_since(t_scan);

  std::optional<gridscan::Chain> chain;
  std::optional<gridscan::PiecewiseLinearManifold> manifold;
  if (outcome.found() && flags.manifold_dim >= 1) {
    const auto t_manifold = Clock::now();
    chain = gridscan::build_chain(*outcome.kept);
    manifold = gridscan::build_manifold(*chain, flags.manifold_dim);
    timings.manifold_ms = ms_since(t_manifold);
  }
  timings.total_ms = ms_since(t_total);
  if (flags.deterministic) timings = gridscan::PhaseTimings{};

  if (outcome.found()) {
    const auto& kept = *outcome.kept;
    char volume[32];
    std::snprintf(volume, sizeof(volume), "%.2f", kept.total_volume());
    std::cout << "found: a=" << kept.resolution.cells_per_axis
              << " cells=" << kept.kept_count() << " volume=" << volume
              << " covered=" << kept.covered() << "/" << dataset.size()
              << "\n";
  } else {
    std::cout << "not-found: " << gridscan::to_string(*outcome.reason)
              << " after " << outcome.trace.size() << " iteration(s)\n";
  }

  const bool found = outcome.found();

  gridscan::RunReport report;
  report.config = config;
  report.manifold_dim = flags.manifold_dim;
  report.dataset_points = dataset.size();
  report.dataset_dim = dataset.dim();
  report.outcome = std::move(outcome);
  report.chain = std::move(chain);
  report.manifold = std::move(manifold);
  report.timings = timings;

  if (!flags.report_path.empty()) {
    gridscan::emit_report(report, flags.report_path);
  }
  if (!flags.plot_path.empty()) {
    const gridscan::KeptCells* kept_ptr =
        report.outcome.kept.has_value() ? &*report.outcome.kept : nullptr;
    const gridscan::Chain* chain_ptr =
        report.chain.has_value() ? &*report.chain : nullptr;
    gridscan::emit_plot(dataset, kept_ptr, chain_ptr, flags.plot_path);
  }

  return found ? kExitFound : kExitNotFound;
}

struct GenFlags {
  std::string kind = "uniform";
  std::size_t points = 100;
  std::uint32_t dim = 2;
  double outlier_fraction = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
};

int run_gen(const GenFlags& flags) {
  gridscan::SyntheticSpec spec;
  spec.kind = gridscan::synthetic_kind_from_string(flags.kind);
  spec.points = flags.points;
  spec.dim = flags.dim;
  spec.outlier_fraction = flags.outlier_fraction;
  spec.seed = flags.seed;

  const gridscan::Dataset dataset = gridscan::generate(spec);
  std::vector<std::vector<double>> rows;
  rows.reserve(dataset.size());
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    const auto p = dataset.point(j);
    rows.emplace_back(p.begin(), p.end());
  }

  const gridscan::PointFormat format =
      flags.format.empty() ? gridscan::format_from_path(flags.output)
                           : (flags.format == "json"
                                  ? gridscan::PointFormat::json
                                  : gridscan::PointFormat::csv);
  if (format == gridscan::PointFormat::json) {
    gridscan::save_points_json(rows, flags.output);
  } else {
    gridscan::save_points_csv(rows, flags.output);
  }
  std::cerr << "wrote " << rows.size() << " points to " << flags.output
            << "\n";
  return 0;
}

struct BenchFlags {
  std::vector<std::size_t> sizes{1000, 2000, 4000};
  std::uint32_t dim = 2;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output;
};

int run_bench_cmd(const BenchFlags& flags) {
  gridscan::BenchOptions options;
  options.sizes = flags.sizes;
  options.dim = flags.dim;
  options.seed = flags.seed;
  options.threads = flags.threads;

  const auto records = gridscan::run_bench(options);
  const std::string csv = gridscan::bench_to_csv(records);
  if (flags.output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(flags.output);
    if (!out) {
      throw gridscan::Error(gridscan::ErrorCode::io_error,
                            "cannot write " + flags.output);
    }
    out << csv;
  }
  std::cerr << "threads=" << flags.threads << "\n";
  return 0;
}

struct PlotFlags {
  IoOptions io;
  std::string report_path;
  std::string output;
};

int run_plot(const PlotFlags& flags) {
  const gridscan::RunReport report = gridscan::load_report(flags.report_path);
  const auto raw = read_points(flags.io);
  auto [dataset, transform] = gridscan::normalize_to_unit_cube(raw);

  if (dataset.size() != report.dataset_points ||
      dataset.dim() != report.dataset_dim) {
    throw gridscan::Error(gridscan::ErrorCode::dimension_mismatch,
                          "input does not match the report's dataset shape");
  }

  const gridscan::KeptCells* kept =
      report.outcome.kept.has_value() ? &*report.outcome.kept : nullptr;
  const gridscan::Chain* chain =
      report.chain.has_value() ? &*report.chain : nullptr;
  gridscan::emit_plot(dataset, kept, chain, flags.output);
  std::cerr << "wrote " << flags.output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive grid scan for low-dimensional structure in point clouds"};
  app.require_subcommand(1);

  ScanFlags scan_flags;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "run the adaptive grid scan on a point cloud");
  add_input_flags(scan_cmd, scan_flags.io);
  scan_cmd->add_option("--volume-limit", scan_flags.volume_limit,
                       "upper limit V on the kept-cell volume");
  scan_cmd->add_option("--coverage", scan_flags.coverage,
                       "fraction of points the kept cells must contain");
  auto* density_fraction =
      scan_cmd->add_option("--density-fraction", scan_flags.density_fraction,
                           "per-cell threshold as a fraction of J");
  scan_cmd->add_option("--density-abs", scan_flags.density_abs,
                       "per-cell threshold as an absolute count")
      ->excludes(density_fraction);
  scan_cmd->add_option("--a-cap", scan_flags.cap_policy,
                       "resolution cap policy")
      ->check(CLI::IsMember({"full", "half"}));
  scan_cmd->add_option("--a-start", scan_flags.a_start,
                       "first resolution of the doubling schedule");
  scan_cmd->add_option("--manifold-dim", scan_flags.manifold_dim,
                       "intrinsic dimension s of the built manifold "
                       "(0 skips the construction)");
  scan_cmd->add_option("--report", scan_flags.report_path,
                       "write a JSON run report here");
  scan_cmd->add_option("--plot", scan_flags.plot_path,
                       "write an SVG figure here");
  scan_cmd->add_option("--threads", scan_flags.threads,
                       "worker threads for histogram building");
  scan_cmd->add_flag("--deterministic", scan_flags.deterministic,
                     "zero the report timings for byte-reproducible output");

  GenFlags gen_flags;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic dataset");
  gen_cmd->add_option("--kind", gen_flags.kind,
                      "diagonal, sine-curve, uniform or two-clusters");
  gen_cmd->add_option("--points", gen_flags.points, "number of points");
  gen_cmd->add_option("--dim", gen_flags.dim, "ambient dimension");
  gen_cmd->add_option("--outlier-fraction", gen_flags.outlier_fraction,
                      "fraction of uniform noise points");
  gen_cmd->add_option("--seed", gen_flags.seed, "generator seed");
  gen_cmd->add_option("--output", gen_flags.output, "output file")->required();
  gen_cmd->add_option("--format", gen_flags.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  BenchFlags bench_flags;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "time scan and the PCA baseline on growing datasets");
  bench_cmd->add_option("--sizes", bench_flags.sizes,
                        "ascending dataset sizes")
      ->delimiter(',');
  bench_cmd->add_option("--dim", bench_flags.dim, "ambient dimension");
  bench_cmd->add_option("--seed", bench_flags.seed, "generator seed");
  bench_cmd->add_option("--threads", bench_flags.threads,
                        "worker threads for histogram building");
  bench_cmd->add_option("--output", bench_flags.output,
                        "CSV output file (stdout when omitted)");

  PlotFlags plot_flags;
  CLI::App* plot_cmd =
      app.add_subcommand("plot", "re-render the figure of a saved report");
  add_input_flags(plot_cmd, plot_flags.io);
  plot_cmd->add_option("--report", plot_flags.report_path,
                       "JSON run report to render")
      ->required();
  plot_cmd->add_option("--output", plot_flags.output, "SVG output file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (scan_cmd->parsed()) return run_scan(scan_flags);
    if (gen_cmd->parsed()) return run_gen(gen_flags);
    if (bench_cmd->parsed()) return run_bench_cmd(bench_flags);
    if (plot_cmd->parsed()) return run_plot(plot_flags);
  } catch (const gridscan::Error& e) {
    std::cerr << "error (" << gridscan::to_string(e.code()) << "): "
              << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
