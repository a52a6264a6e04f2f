#include "doctest.h"

#include <algorithm>
#include <set>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "oracles.hpp"

using namespace graphmfd;
namespace oracle = testing_oracles;

namespace {

Multigraph graph_of(int vertices, std::vector<std::pair<int, int>> edges) {
  return Multigraph{vertices, std::move(edges)};
}

// Checks the walk is closed, has odd length and uses real incidences.
void check_odd_walk(const Multigraph& g, const OddCycleResult& result) {
  REQUIRE(result.found);
  REQUIRE(result.vertices.size() == result.edges.size() + 1);
  CHECK(result.vertices.front() == result.vertices.back());
  CHECK(result.edges.size() % 2 == 1);
  for (size_t i = 0; i < result.edges.size(); ++i) {
    auto [u, v] = g.edges[result.edges[i]];
    int from = result.vertices[i];
    int to = result.vertices[i + 1];
    bool matches = (u == from && v == to) || (u == to && v == from);
    CHECK(matches);
  }
}

}  // namespace

TEST_CASE("cycle rank of a tree is zero") {
  CycleRankResult r =
      cycle_rank(graph_of(4, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(r.ell == 0);
  CHECK(r.spanning_tree.size() == 3);
}

TEST_CASE("cycle rank of a triangle is one") {
  CycleRankResult r = cycle_rank(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(r.ell == 1);
  CHECK(r.spanning_tree.size() == 2);
}

TEST_CASE("cycle rank of a single loop is one") {
  CycleRankResult r = cycle_rank(graph_of(1, {{0, 0}}));
  CHECK(r.ell == 1);
  CHECK(r.spanning_tree.empty());
}

TEST_CASE("cycle rank rejects disconnected graphs") {
  CHECK_THROWS_WITH_AS(cycle_rank(graph_of(2, {})), "graph not connected",
                       Error);
}

TEST_CASE("cycle rank matches the incidence-matrix oracle") {
  oracle::Rng rng(oracle::seed_from_env() + 1);
  for (int i = 0; i < 200; ++i) {
    Multigraph g = oracle::random_connected_multigraph(rng, 6, 10);
    CycleRankResult r = cycle_rank(g);
    CHECK(r.ell == oracle::cycle_space_dimension_gf2(g));
    // The witness tree is acyclic and spanning.
    Multigraph tree{g.vertex_count, {}};
    for (int e : r.spanning_tree) tree.edges.push_back(g.edges[e]);
    CHECK(cycle_rank(tree).ell == 0);
  }
}

TEST_CASE("even cycles are not odd") {
  CHECK_FALSE(
      find_odd_cycle(graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).found);
  CHECK_FALSE(find_odd_cycle(graph_of(2, {{0, 1}, {0, 1}})).found);
}

TEST_CASE("triangles give a length-3 witness") {
  Multigraph g = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  OddCycleResult r = find_odd_cycle(g);
  check_odd_walk(g, r);
  CHECK(r.edges.size() == 3);
}

TEST_CASE("self-loops give a length-1 witness") {
  Multigraph g = graph_of(1, {{0, 0}});
  OddCycleResult r = find_odd_cycle(g);
  check_odd_walk(g, r);
  CHECK(r.edges.size() == 1);
}

TEST_CASE("odd-cycle witnesses verify on the random corpus") {
  oracle::Rng rng(oracle::seed_from_env() + 2);
  for (int i = 0; i < 200; ++i) {
    Multigraph g = oracle::random_connected_multigraph(rng, 6, 9);
    OddCycleResult r = find_odd_cycle(g);
    bool bipartite = oracle::doubling_separates(g, {});
    CHECK(r.found == !bipartite);
    if (r.found) check_odd_walk(g, r);
  }
}

TEST_CASE("trees need no modification") {
  GraphManifold m = oracle::manifold_from_graph(
      graph_of(4, {{0, 1}, {1, 2}, {1, 3}}));
  Modification mod = amalgamatable_modification(m);
  CHECK(mod.q() == 0);
  CHECK(mod.doubled_edges.empty());
}

TEST_CASE("a self-loop forces its own doubling") {
  GraphManifold m = oracle::manifold_from_graph(graph_of(1, {{0, 0}}));
  Modification mod = amalgamatable_modification(m);
  CHECK(mod.doubled_edges == std::vector<int>{0});
  CHECK(mod.bipartition.size() == 2);
  CHECK(mod.bipartition[0] != mod.bipartition[1]);
}

TEST_CASE("two triangles sharing an edge double the shared edge") {
  // vertices 0,1,2 and 0,2,3; edge 2 = {0,2} is shared
  Multigraph g = graph_of(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}});
  GraphManifold m = oracle::manifold_from_graph(g);
  Modification mod = amalgamatable_modification(m);
  CHECK(mod.doubled_edges == std::vector<int>{2});
}

TEST_CASE("modification matches the exhaustive oracle") {
  oracle::Rng rng(oracle::seed_from_env() + 3);
  for (int i = 0; i < 80; ++i) {
    GraphManifold m = oracle::random_manifold(rng, 5, 8);
    Modification mod = amalgamatable_modification(m);
    auto [q, set] = oracle::exhaustive_min_doubling(to_multigraph(m));
    CHECK(mod.q() == q);
    CHECK(mod.doubled_edges == set);
    // The witness bipartition is proper on the derived graph.
    DerivedGraph derived = derive_graph(m, mod.doubled_edges);
    for (const DerivedGraph::DEdge& e : derived.edges) {
      CHECK(mod.bipartition[e.u] != mod.bipartition[e.v]);
    }
  }
}

TEST_CASE("doubling every edge always separates") {
  oracle::Rng rng(oracle::seed_from_env() + 4);
  for (int i = 0; i < 100; ++i) {
    Multigraph g = oracle::random_connected_multigraph(rng, 6, 9);
    std::vector<int> all(g.edge_count());
    std::iota(all.begin(), all.end(), 0);
    CHECK(oracle::doubling_separates(g, all));
    GraphManifold m = oracle::manifold_from_graph(g);
    DerivedGraph derived = derive_graph(m, all);
    CHECK_FALSE(find_odd_cycle(to_multigraph(derived)).found);
  }
}

TEST_CASE("bipartite input needs q = 0 and greedy never beats the minimum") {
  oracle::Rng rng(oracle::seed_from_env() + 5);
  for (int i = 0; i < 100; ++i) {
    GraphManifold m = oracle::random_manifold(rng, 5, 8);
    Modification mod = amalgamatable_modification(m);
    if (!find_odd_cycle(to_multigraph(m)).found) {
      CHECK(mod.q() == 0);
    }
    CHECK(greedy_modification_size(m) >= mod.q());
  }
}

TEST_CASE("bipartitions returns the two swaps") {
  GraphManifold m =
      oracle::manifold_from_graph(graph_of(2, {{0, 1}}));
  Modification mod = amalgamatable_modification(m);
  auto [first, second] = bipartitions(m, mod);
  CHECK(first.side == std::vector<Side>{Side::m1, Side::m2});
  CHECK(second.side == std::vector<Side>{Side::m2, Side::m1});

  GraphManifold path =
      oracle::manifold_from_graph(graph_of(3, {{0, 1}, {1, 2}}));
  auto [p1, p2] = bipartitions(path, amalgamatable_modification(path));
  CHECK(p1.side == std::vector<Side>{Side::m1, Side::m2, Side::m1});
  CHECK(p2.side == std::vector<Side>{Side::m2, Side::m1, Side::m2});
}

TEST_CASE("bipartitions of a doubled self-loop") {
  GraphManifold m = oracle::manifold_from_graph(graph_of(1, {{0, 0}}));
  Modification mod = amalgamatable_modification(m);
  auto [first, second] = bipartitions(m, mod);
  CHECK(first.side == std::vector<Side>{Side::m1, Side::m2});
  CHECK(second.side == std::vector<Side>{Side::m2, Side::m1});
}

TEST_CASE("a non-separating modification is rejected") {
  GraphManifold m = oracle::manifold_from_graph(graph_of(1, {{0, 0}}));
  Modification mod;  // empty doubled set leaves the loop odd
  CHECK_THROWS_WITH_AS(bipartitions(m, mod), "modification not separating",
                       Error);
}
