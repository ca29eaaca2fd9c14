#include <doctest.h>

#include <string>

#include "gridscan/manifold.hpp"
#include "gridscan/plot.hpp"
#include "gridscan/scan.hpp"
#include "gridscan/synthetic.hpp"

using namespace gridscan;

namespace {

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("found run draws K rectangles and K-1 segments") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::diagonal;
  spec.points = 100;
  spec.dim = 2;
  const Dataset dataset = generate(spec);

  ScanConfig config;
  config.volume_limit = 0.5;
  config.density = DensityThreshold::from_absolute(1);
  const ScanOutcome outcome = scan(dataset, config);
  REQUIRE(outcome.found());
  const Chain chain = build_chain(*outcome.kept);

  const std::string svg = render_plot_svg(dataset, &*outcome.kept, &chain);
  const std::size_t kept = outcome.kept->kept_count();
  CHECK(count_occurrences(svg, "<rect") == kept);
  CHECK(count_occurrences(svg, "<line") == kept - 1);
  CHECK(count_occurrences(svg, "<circle") == dataset.size());
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("not-found run draws points only") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::uniform;
  spec.points = 60;
  spec.dim = 2;
  spec.seed = 12;
  const Dataset dataset = generate(spec);
  const std::string svg = render_plot_svg(dataset, nullptr, nullptr);
  CHECK(count_occurrences(svg, "<rect") == 0);
  CHECK(count_occurrences(svg, "<line") == 0);
  CHECK(count_occurrences(svg, "<circle") == dataset.size());
}

TEST_CASE("higher-dimensional data is projected, not rejected") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::sine_curve;
  spec.points = 300;
  spec.dim = 3;
  spec.outlier_fraction = 0.05;
  spec.seed = 9;
  const Dataset dataset = generate(spec);

  ScanConfig config;
  config.volume_limit = 0.5;
  const ScanOutcome outcome = scan(dataset, config);
  REQUIRE(outcome.found());
  const Chain chain = build_chain(*outcome.kept);

  const std::string svg = render_plot_svg(dataset, &*outcome.kept, &chain);
  CHECK(count_occurrences(svg, "<rect") == outcome.kept->kept_count());
  CHECK(count_occurrences(svg, "<circle") == dataset.size());
}

TEST_CASE("rendering is deterministic") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::two_clusters;
  spec.points = 80;
  spec.dim = 2;
  spec.seed = 4;
  const Dataset dataset = generate(spec);
  CHECK(render_plot_svg(dataset, nullptr, nullptr) ==
        render_plot_svg(dataset, nullptr, nullptr));
}
