#include <doctest.h>

#include "support/properties.hpp"

using gridscan::testing::PropertyResult;

TEST_CASE("invariant battery") {
  const auto results = gridscan::testing::run_invariant_battery(0xC0FFEE);
  std::size_t total_cases = 0;
  for (const PropertyResult& result : results) {
    INFO(result.name);
    for (const auto& failure : result.failures) {
      INFO(failure);
    }
    CHECK(result.ok());
    CHECK(result.cases > 0);
    total_cases += result.cases;
  }
  CHECK(total_cases >= 1000);
}

TEST_CASE("sparse histogram equals dense counting on larger draws") {
  const auto result = gridscan::testing::histogram_matches_dense_oracle(
      0xFEED, 10, 2000, 3, 16);
  for (const auto& failure : result.failures) {
    INFO(failure);
  }
  CHECK(result.ok());
}
