#include <random>

#include "doctest.h"
#include "quasitree/error.hpp"
#include "quasitree/map_core.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace quasitree;

TEST_CASE("construction rejects invalid permutations") {
  CHECK_THROWS_AS(CombMap({0, 1, 2}, {1, 0, 2}), InputError);       // odd
  CHECK_THROWS_AS(CombMap({0, 0}, {1, 0}), InputError);             // sigma not bijective
  CHECK_THROWS_AS(CombMap({0, 1}, {0, 1}), InputError);             // alpha has fixed points
  CHECK_THROWS_AS(CombMap({0, 1, 2, 3}, {1, 2, 3, 0}), InputError); // alpha not an involution
  CHECK_THROWS_AS(CombMap::from_rotation({1, 0}, {"a", "b"}), InputError);
  CHECK_THROWS_AS(CombMap({0, 5}, {1, 0}), InputError);
}

TEST_CASE("components of degenerate maps") {
  const CombMap empty;
  CHECK(empty.vertex_count() == 0);
  CHECK(components(empty).count == 0);

  const CombMap point({}, {}, {}, 1);
  CHECK(point.vertex_count() == 1);
  CHECK(components(point).count == 1);
  const auto p = subgraph_profile(point, {});
  CHECK(p.components == 1);
  CHECK(p.boundaries == 1);
  CHECK(p.genus == 0);
}

TEST_CASE("empty subset: every vertex is its own disk") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto map = oracle::random_map(rng, 1 + trial % 5);
    const auto p = subgraph_profile(map, {});
    CHECK(p.boundaries == map.vertex_count());
    CHECK(p.components == map.vertex_count());
    CHECK(p.rank == 0);
    CHECK(p.nullity == 0);
    CHECK(p.genus == 0);
  }
}

TEST_CASE("fixture maps") {
  const auto loop = fixture::map("planar_loop.map");
  CHECK(loop.vertex_count() == 1);
  CHECK(map_profile(loop).boundaries == 2);
  CHECK(map_profile(loop).genus == 0);

  const auto torus = fixture::map("twisted_pair.map");
  CHECK(torus.vertex_count() == 1);
  CHECK(torus.edge_labels() == std::vector<std::string>{"a", "b"});
  const auto full = map_profile(torus);
  CHECK(full.boundaries == 1);
  CHECK(full.genus == 1);

  const auto theta = fixture::map("theta.map");
  CHECK(theta.vertex_count() == 2);
  CHECK(map_profile(theta).genus == 0);
  CHECK(map_profile(theta).boundaries == 3);

  const auto point = fixture::map("single_vertex.map");
  CHECK(point.vertex_count() == 1);
  CHECK(point.edge_count() == 0);
}

TEST_CASE("spanning tree subsets are genus-0 quasi-trees") {
  const auto theta = fixture::map("theta.map");
  for (std::size_t e = 0; e < 3; ++e) {
    const std::vector<std::size_t> tree{e};
    const auto p = subgraph_profile(theta, tree);
    CHECK(p.components == 1);
    CHECK(p.nullity == 0);
    CHECK(p.boundaries == 1);
    CHECK(p.genus == 0);
  }
}

TEST_CASE("subset index out of range is an input error") {
  const auto theta = fixture::map("theta.map");
  const std::vector<std::size_t> bad{0, 3};
  CHECK_THROWS_AS(boundary_components(theta, bad), InputError);
  CHECK_THROWS_AS(subgraph_profile(theta, bad), InputError);
}

TEST_CASE("single non-loop edge in a connected map leaves V - 1 boundaries") {
  std::mt19937 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto map = oracle::random_connected_map(rng, 1 + trial % 6);
    for (std::size_t e = 0; e < map.edge_count(); ++e) {
      const auto& [d0, d1] = map.edge_darts(e);
      if (map.vertex_of(d0) == map.vertex_of(d1)) continue;
      const std::vector<std::size_t> one{e};
      CHECK(boundary_components(map, one) == map.vertex_count() - 1);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("profile agrees with the brute-force orbit oracle on all subsets") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t edges = 1 + static_cast<std::size_t>(trial % 6);
    const auto map = oracle::random_map(rng, edges);
    SubsetProfiler profiler(map);
    for (std::uint64_t mask = 0; mask < (1U << edges); ++mask) {
      const auto subset = oracle::subset_of(mask);
      const auto want = oracle::stats(map, subset);
      const auto p = subgraph_profile(map, subset);
      REQUIRE(p.boundaries == want.f);
      REQUIRE(boundary_components(map, subset) == want.f);
      REQUIRE(p.components == want.k);
      REQUIRE(p.nullity == want.n);
      REQUIRE(want.genus_twice % 2 == 0);
      REQUIRE(p.genus * 2 == static_cast<std::size_t>(want.genus_twice));
      REQUIRE(p.rank + p.nullity == subset.size());
      REQUIRE(p.boundaries >= p.components);

      const auto c = profiler.evaluate(mask);
      REQUIRE(c.boundaries == static_cast<int>(want.f));
      REQUIRE(c.components == static_cast<int>(want.k));
      REQUIRE(c.genus * 2 == want.genus_twice);
    }
  }
}

TEST_CASE("deleting an edge changes the boundary count by exactly one") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t edges = 1 + static_cast<std::size_t>(trial % 5);
    const auto map = oracle::random_map(rng, edges);
    for (std::uint64_t mask = 0; mask < (1U << edges); ++mask) {
      const auto f = static_cast<long>(boundary_components(map, oracle::subset_of(mask)));
      for (std::size_t e = 0; e < edges; ++e) {
        if (!((mask >> e) & 1U)) continue;
        const auto g = static_cast<long>(boundary_components(map, oracle::subset_of(mask & ~(1ULL << e))));
        REQUIRE(std::abs(f - g) == 1);
      }
    }
  }
}

TEST_CASE("components by dart reachability match the incidence graph") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto map = oracle::random_map(rng, 1 + trial % 7);
    CHECK(components(map).count == oracle::components(map, all_edges(map)));
  }
}

TEST_CASE("Euler relation per map") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto map = oracle::random_connected_map(rng, 1 + trial % 7);
    const auto p = map_profile(map);
    const long chi = static_cast<long>(p.vertices) - static_cast<long>(map.edge_count()) +
                     static_cast<long>(p.boundaries);
    CHECK(chi == 2 - 2 * static_cast<long>(p.genus));
  }
}

TEST_CASE("map text round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto map = oracle::random_map(rng, 1 + trial % 4);
    CHECK(parse_map(to_text(map)) == map);
  }
  const CombMap labelled = CombMap::from_rotation({2, 3, 1, 0}, {"a", "b"}, 2);
  CHECK(parse_map(to_text(labelled)) == labelled);
  CHECK_THROWS_AS(parse_map("sigma: 1 0\n"), InputError);
  CHECK_THROWS_AS(parse_map("sigma: 1 x\nalpha: 1 0\n"), InputError);
  CHECK_THROWS_AS(parse_map("sigma: 1 0\nalpha: 1 0\nfoo: 3\n"), InputError);
}
