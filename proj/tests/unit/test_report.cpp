#include <doctest.h>

#include <string>

#include "gridscan/error.hpp"
#include "gridscan/manifold.hpp"
#include "gridscan/report.hpp"
#include "gridscan/scan.hpp"
#include "gridscan/synthetic.hpp"

using namespace gridscan;

namespace {

RunReport make_found_report() {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::sine_curve;
  spec.points = 150;
  spec.dim = 2;
  spec.outlier_fraction = 0.05;
  spec.seed = 31;
  const Dataset dataset = generate(spec);

  ScanConfig config;
  config.volume_limit = 0.5;

  RunReport report;
  report.config = config;
  report.manifold_dim = 2;
  report.dataset_points = dataset.size();
  report.dataset_dim = dataset.dim();
  report.outcome = scan(dataset, config);
  if (report.outcome.found()) {
    report.chain = build_chain(*report.outcome.kept);
    report.manifold = build_manifold(*report.chain, report.manifold_dim);
  }
  report.timings = PhaseTimings{0.25, 1.5, 0.125, 2.0};
  return report;
}

}  // namespace

TEST_CASE("found report round-trips byte-identically") {
  const RunReport report = make_found_report();
  REQUIRE(report.outcome.found());

  const std::string first = report_to_json(report);
  CHECK(first.find("\"schema_version\": 1") != std::string::npos);

  const RunReport parsed = parse_report_json(first);
  const std::string second = report_to_json(parsed);
  CHECK(first == second);

  CHECK(parsed.dataset_points == report.dataset_points);
  CHECK(parsed.outcome.found());
  CHECK(parsed.outcome.kept->cells.size() == report.outcome.kept->cells.size());
  CHECK(parsed.outcome.trace.size() == report.outcome.trace.size());
  CHECK(parsed.chain->sources == report.chain->sources);
  CHECK(parsed.manifold->simplices == report.manifold->simplices);
  CHECK(parsed.timings.scan_ms == report.timings.scan_ms);
}

TEST_CASE("not-found report keeps the reason and drops the cells") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::uniform;
  spec.points = 200;
  spec.dim = 2;
  spec.seed = 5;
  const Dataset dataset = generate(spec);

  ScanConfig config;
  config.coverage_fraction = 0.95;

  RunReport report;
  report.config = config;
  report.dataset_points = dataset.size();
  report.dataset_dim = dataset.dim();
  report.outcome = scan(dataset, config);
  REQUIRE_FALSE(report.outcome.found());

  const std::string text = report_to_json(report);
  CHECK(text.find("\"kept\": null") != std::string::npos);
  CHECK(text.find("\"chain\": null") != std::string::npos);

  const RunReport parsed = parse_report_json(text);
  CHECK_FALSE(parsed.outcome.found());
  CHECK(parsed.outcome.reason == report.outcome.reason);
  CHECK(report_to_json(parsed) == text);
}

TEST_CASE("serialization is deterministic") {
  const RunReport report = make_found_report();
  CHECK(report_to_json(report) == report_to_json(report));
}

TEST_CASE("parser rejects malformed reports") {
  CHECK_THROWS_AS(parse_report_json("not json at all"), Error);
  CHECK_THROWS_AS(parse_report_json("{}"), Error);
  try {
    parse_report_json("{\"schema_version\": 1}");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
  }
}
