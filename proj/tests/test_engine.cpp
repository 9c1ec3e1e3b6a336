#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nrg/capacity.hpp"
#include "nrg/engine.hpp"
#include "nrg/graph.hpp"

using namespace nrg;

namespace {

// path 0-1-2, triangle 3-4-5, isolated 6, loop at 7
MultiGraph fixture() {
  return MultiGraph::from_edges(
      8, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 5}, {7, 7}});
}

}  // namespace

TEST_CASE("component labeling on a hand-built graph") {
  const auto g = fixture();
  const auto lab = connected_components(g);
  REQUIRE(lab.label.size() == 8);
  CHECK(lab.sizes.size() == 4);
  CHECK(lab.label[0] == lab.label[1]);
  CHECK(lab.label[1] == lab.label[2]);
  CHECK(lab.label[3] == lab.label[4]);
  CHECK(lab.label[4] == lab.label[5]);
  CHECK(lab.label[0] != lab.label[3]);
  CHECK(lab.label[6] != lab.label[7]);
  CHECK(lab.giant_size() == 3);
  // tie between {0,1,2} and {3,4,5}: smallest component id wins
  CHECK(lab.giant_id == lab.label[0]);
}

TEST_CASE("bfs distances on the fixture") {
  const auto g = fixture();
  const auto d = bfs_distances(g, 0);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == 2);
  CHECK(d[3] == kUnreachable);
  CHECK(d[6] == kUnreachable);
  CHECK(bfs_distance(g, 0, 2) == 2);
  CHECK(bfs_distance(g, 2, 0) == 2);
  CHECK(bfs_distance(g, 0, 0) == 0);
  CHECK(bfs_distance(g, 0, 6) == kUnreachable);
  CHECK(bfs_distance(g, 3, 5) == 1);  // triangle, not through 4
  CHECK(bfs_distance(g, 7, 7) == 0);  // loop does not change distance
}

TEST_CASE("multiplicities do not shorten distances") {
  const auto g =
      MultiGraph::from_edges(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}});
  CHECK(bfs_distance(g, 0, 2) == 2);
  const auto d = bfs_distances(g, 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == 2);
}

TEST_CASE("path graph distances match indices") {
  const std::uint32_t n = 200;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  const auto g = MultiGraph::from_edges(n, edges);
  const auto d = bfs_distances(g, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    CHECK(d[i] == static_cast<std::int32_t>(i));
  CHECK(exact_component_diameter(g) == n - 1);
}

TEST_CASE("giant distance sampling stays inside the giant") {
  const auto caps = sample_capacities(2000, 2.5, 31);
  const auto g = generate_fast(caps, 31);
  const auto lab = connected_components(g);
  REQUIRE(lab.giant_size() >= 2);
  const auto d = sample_giant_distances(g, lab, 500, 7);
  REQUIRE(d.size() == 500);
  for (auto v : d) {
    CHECK(v >= 1);  // distinct pairs, both in the giant
    CHECK(v != kUnreachable);
  }
  // deterministic in the seed
  CHECK(sample_giant_distances(g, lab, 500, 7) == d);
  CHECK(sample_giant_distances(g, lab, 500, 8) != d);
}

TEST_CASE("neighborhood shells partition the reachable ball") {
  const auto g = fixture();
  const auto sh = neighborhood_shells(g, 0, 10);
  REQUIRE(sh.shells.size() == 3);
  CHECK(sh.shells[0] == std::vector<std::uint32_t>{0});
  CHECK(sh.shells[1] == std::vector<std::uint32_t>{1});
  CHECK(sh.shells[2] == std::vector<std::uint32_t>{2});

  const auto tri = neighborhood_shells(g, 4, 10);
  REQUIRE(tri.shells.size() == 2);
  CHECK(tri.shells[1] == std::vector<std::uint32_t>{3, 5});

  const auto cut = neighborhood_shells(g, 0, 1);
  CHECK(cut.shells.size() == 2);

  // shells agree with BFS distance layers on a random graph
  const auto caps = sample_capacities(500, 2.5, 3);
  const auto rg = generate_fast(caps, 3);
  const auto d = bfs_distances(rg, 0);
  const auto rsh = neighborhood_shells(rg, 0, 50);
  for (std::size_t k = 0; k < rsh.shells.size(); ++k)
    for (auto v : rsh.shells[k])
      CHECK(d[v] == static_cast<std::int32_t>(k));
  std::size_t reach = 0;
  for (auto v : d)
    if (v != kUnreachable) ++reach;
  std::size_t in_shells = 0;
  for (const auto& s : rsh.shells) in_shells += s.size();
  CHECK(in_shells == reach);
}

TEST_CASE("induced subgraph keeps internal edges only") {
  const auto g = fixture();
  const auto sub = induced_subgraph(g, {5, 3, 4, 0});
  CHECK(sub.old_ids == std::vector<std::uint32_t>{0, 3, 4, 5});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edge_total() == 3);  // the triangle survives, 0 isolated
  CHECK(sub.graph.degree(0) == 0);
  CHECK(sub.graph.multiplicity(1, 2) == 1);
  CHECK(sub.graph.multiplicity(1, 3) == 1);
  sub.graph.validate();

  const auto loop = induced_subgraph(g, {7});
  CHECK(loop.graph.edge_total() == 1);
  CHECK(loop.graph.degree(0) == 2);
}

TEST_CASE("diameter of hand-built graphs") {
  CHECK(exact_component_diameter(fixture()) == 2);
  const auto tri = MultiGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(exact_component_diameter(tri) == 1);
  const auto single = MultiGraph::from_edges(1, {});
  CHECK(exact_component_diameter(single) == 0);
  CHECK_THROWS(exact_component_diameter(tri, 2));
}
