// Seeded property checks shared by the unit suite and the acceptance runner.
// Each function generates its own cases and reports how many it ran plus any
// failure descriptions.

#ifndef GRIDSCAN_TESTS_PROPERTIES_HPP
#define GRIDSCAN_TESTS_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gridscan::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

// geometry-core
PropertyResult counting_conservation(std::uint64_t seed, std::size_t cases);
PropertyResult partition_property(std::uint64_t seed, std::size_t cases);
PropertyResult histogram_matches_dense_oracle(std::uint64_t seed,
                                              std::size_t cases,
                                              std::size_t max_points,
                                              std::uint32_t max_dim,
                                              std::uint32_t max_resolution);
PropertyResult normalization_roundtrip(std::uint64_t seed, std::size_t cases);

// scan
PropertyResult monotone_filtering(std::uint64_t seed, std::size_t cases);
PropertyResult volume_identity(std::uint64_t seed, std::size_t cases);
PropertyResult found_certificate(std::uint64_t seed, std::size_t cases);
PropertyResult termination_bound(std::uint64_t seed, std::size_t cases);
PropertyResult scan_determinism(std::uint64_t seed, std::size_t cases);

// manifold
PropertyResult chain_permutation(std::uint64_t seed, std::size_t cases);
PropertyResult window_counts(std::uint64_t seed, std::size_t cases);

/// The whole battery with the default case counts used by the acceptance
/// suite (>= 1000 generated cases in total).
std::vector<PropertyResult> run_invariant_battery(std::uint64_t seed);

}  // namespace gridscan::testing

#endif  // GRIDSCAN_TESTS_PROPERTIES_HPP
