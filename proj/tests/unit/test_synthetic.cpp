#include <doctest.h>

#include <cmath>
#include <vector>

#include "gridscan/error.hpp"
#include "gridscan/synthetic.hpp"

using namespace gridscan;

namespace {

double distance_to_sine_arc(double x, double y) {
  double best = 1e9;
  for (int i = 0; i <= 2000; ++i) {
    const double t = i / 2000.0;
    const double cy = 0.5 + 0.35 * std::sin(2.0 * M_PI * t);
    const double dx = x - t;
    const double dy = y - cy;
    best = std::min(best, std::sqrt(dx * dx + dy * dy));
  }
  return best;
}

}  // namespace

TEST_CASE("diagonal generator is the exact grid") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::diagonal;
  spec.points = 100;
  spec.dim = 2;
  const Dataset dataset = generate(spec);
  REQUIRE(dataset.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(dataset.point(i)[0] == i / 99.0);
    CHECK(dataset.point(i)[1] == i / 99.0);
  }
}

TEST_CASE("generation is reproducible per seed") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::sine_curve;
  spec.points = 308;
  spec.dim = 2;
  spec.outlier_fraction = 0.08;
  spec.seed = 7;
  const Dataset first = generate(spec);
  const Dataset second = generate(spec);
  CHECK(first.coords() == second.coords());

  spec.seed = 8;
  const Dataset other = generate(spec);
  CHECK(first.coords() != other.coords());
}

TEST_CASE("sine-curve points hug the arc, outliers fill the square") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::sine_curve;
  spec.points = 308;
  spec.dim = 2;
  spec.outlier_fraction = 0.08;
  spec.seed = 7;
  const Dataset dataset = generate(spec);
  REQUIRE(dataset.size() == 308);

  // floor(0.08 * 308) = 24 outliers; the first 284 points are curve samples.
  const std::size_t curve_points = 284;
  for (std::size_t j = 0; j < curve_points; ++j) {
    const auto p = dataset.point(j);
    CHECK(distance_to_sine_arc(p[0], p[1]) < 0.09);
  }
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    for (double c : dataset.point(j)) {
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
  }
}

TEST_CASE("two clusters sit near their centers") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::two_clusters;
  spec.points = 200;
  spec.dim = 2;
  spec.seed = 3;
  const Dataset dataset = generate(spec);
  std::size_t near_low = 0;
  std::size_t near_high = 0;
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    const auto p = dataset.point(j);
    const double d_low = std::hypot(p[0] - 0.3, p[1] - 0.3);
    const double d_high = std::hypot(p[0] - 0.7, p[1] - 0.7);
    if (d_low < 0.25) ++near_low;
    if (d_high < 0.25) ++near_high;
  }
  CHECK(near_low >= 90);
  CHECK(near_high >= 90);
}

TEST_CASE("spec validation") {
  SyntheticSpec spec;
  spec.points = 0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec = SyntheticSpec{};
  spec.dim = 0;
  CHECK_THROWS_AS(generate(spec), Error);
  spec = SyntheticSpec{};
  spec.outlier_fraction = 1.0;
  CHECK_THROWS_AS(generate(spec), Error);
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {SyntheticKind::diagonal, SyntheticKind::sine_curve,
                    SyntheticKind::uniform, SyntheticKind::two_clusters}) {
    CHECK(synthetic_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(synthetic_kind_from_string("spiral"), Error);
}
