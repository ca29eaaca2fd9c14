#include <doctest.h>

#include <vector>

#include "gridscan/error.hpp"
#include "gridscan/manifold.hpp"

using namespace gridscan;

namespace {

KeptCells kept_from_indices(std::uint32_t a, std::uint32_t dim,
                            const std::vector<CellIndex>& indices) {
  KeptCells kept;
  kept.resolution = GridResolution{a, dim};
  for (const auto& index : indices) {
    kept.cells.push_back(
        KeptCell{index, cell_center(index, kept.resolution), 1});
  }
  return kept;
}

}  // namespace

TEST_CASE("a single kept cube gives a one-vertex chain") {
  const KeptCells kept = kept_from_indices(2, 2, {{1, 0}});
  const Chain chain = build_chain(kept);
  CHECK(chain.length() == 1);
  CHECK(chain.vertices[0] == std::vector<double>{0.75, 0.25});
  const PiecewiseLinearManifold manifold = build_manifold(chain, 1);
  CHECK(manifold.simplices.empty());
}

TEST_CASE("greedy chain takes the nearer neighbor first") {
  // Centers (0.25,0.25), (0.75,0.75), (0.25,0.75): from the corner cell the
  // vertical neighbor is at distance 0.5, the diagonal one at ~0.707.
  const KeptCells kept = kept_from_indices(2, 2, {{0, 0}, {1, 1}, {0, 1}});
  const Chain chain = build_chain(kept);
  REQUIRE(chain.length() == 3);
  CHECK(chain.sources[0] == CellIndex{0, 0});
  CHECK(chain.sources[1] == CellIndex{0, 1});
  CHECK(chain.sources[2] == CellIndex{1, 1});
}

TEST_CASE("collinear centers chain in coordinate order") {
  std::vector<CellIndex> indices;
  for (std::uint32_t k = 0; k < 8; ++k) indices.push_back({k, 0});
  const KeptCells kept = kept_from_indices(8, 2, indices);
  const Chain chain = build_chain(kept);
  REQUIRE(chain.length() == 8);
  for (std::uint32_t k = 0; k < 8; ++k) {
    CHECK(chain.vertices[k][0] == (2.0 * k + 1.0) * 0.0625);
    CHECK(chain.sources[k] == CellIndex{k, 0});
  }
  CHECK(count_tied_steps(kept) == 0);
}

TEST_CASE("window simplices") {
  Chain chain;
  for (int k = 0; k < 5; ++k) {
    chain.vertices.push_back({k / 4.0, 0.5});
    chain.sources.push_back({static_cast<std::uint32_t>(k), 0});
  }

  SUBCASE("edges for s=1") {
    const auto manifold = build_manifold(chain, 1);
    REQUIRE(manifold.simplices.size() == 4);
    CHECK(manifold.simplices[0] == std::vector<std::uint32_t>{0, 1});
    CHECK(manifold.simplices[3] == std::vector<std::uint32_t>{3, 4});
  }
  SUBCASE("triangles for s=2") {
    const auto manifold = build_manifold(chain, 2);
    REQUIRE(manifold.simplices.size() == 3);
    CHECK(manifold.simplices[0] == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(manifold.simplices[1] == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(manifold.simplices[2] == std::vector<std::uint32_t>{2, 3, 4});
  }
  SUBCASE("degenerate when K <= s") {
    Chain two;
    two.vertices = {{0.25, 0.25}, {0.75, 0.75}};
    two.sources = {{0, 0}, {1, 1}};
    const auto manifold = build_manifold(two, 2);
    CHECK(manifold.dim == 2);
    CHECK(manifold.simplices.empty());
  }
  SUBCASE("s must be positive") {
    CHECK_THROWS_AS(build_manifold(chain, 0), Error);
  }
}

TEST_CASE("tie diagnostics") {
  SUBCASE("L-shaped triple has one tied step") {
    const KeptCells kept = kept_from_indices(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    CHECK(count_tied_steps(kept) == 1);
    // The tie resolves to the lexicographically smaller cell index.
    const Chain chain = build_chain(kept);
    CHECK(chain.sources[1] == CellIndex{0, 1});
  }
  SUBCASE("square of four has one tied step") {
    const KeptCells kept =
        kept_from_indices(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(count_tied_steps(kept) == 1);
  }
}

TEST_CASE("origin ties resolve to the smaller cell index") {
  // (0.25,0.75) and (0.75,0.25) are equally far from the origin.
  const KeptCells kept = kept_from_indices(2, 2, {{1, 0}, {0, 1}});
  const Chain chain = build_chain(kept);
  CHECK(chain.sources[0] == CellIndex{0, 1});
  CHECK(chain.sources[1] == CellIndex{1, 0});
}

TEST_CASE("chaining zero cells is an error") {
  KeptCells empty;
  empty.resolution = GridResolution{2, 2};
  CHECK_THROWS_AS(build_chain(empty), Error);
  CHECK_THROWS_AS(count_tied_steps(empty), Error);
}
