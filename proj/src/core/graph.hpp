#pragma once

#include <utility>
#include <vector>

#include "core/model.hpp"

namespace graphmfd {

// Plain multigraph view used by the cycle and bipartization algorithms.
// Self-loops and parallel edges are allowed.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

Multigraph to_multigraph(const GraphManifold& manifold);
Multigraph to_multigraph(const DerivedGraph& derived);

bool is_connected(const Multigraph& graph);

struct CycleRankResult {
  int ell = 0;                     // first Betti number, 1 - n + m
  std::vector<int> spanning_tree;  // n-1 witnessing edge indices
};

// Requires a connected graph; throws "graph not connected" otherwise.
CycleRankResult cycle_rank(const Multigraph& graph);

struct OddCycleResult {
  bool found = false;
  // Closed walk of odd edge length: vertices[i] -- edges[i] -- vertices[i+1],
  // with vertices.front() == vertices.back(). A self-loop gives length 1.
  std::vector<int> vertices;
  std::vector<int> edges;
};

OddCycleResult find_odd_cycle(const Multigraph& graph);

// A set of doubled edges makes the torus system mutually separating exactly
// when the derived graph is bipartite, i.e. when some 2-coloring of the
// base vertices makes every doubled edge monochromatic and every other edge
// bichromatic. amalgamatable_modification computes the minimum-size set,
// breaking ties toward the lexicographically smallest sorted index tuple,
// together with a witness bipartition of the derived graph.
Modification amalgamatable_modification(const GraphManifold& manifold);

// Size of the doubled set produced by the iterative odd-cycle process
// (repeatedly double the lowest-index undoubled edge on some odd cycle).
// Reported alongside the exact minimum for comparison.
int greedy_modification_size(const GraphManifold& manifold);

// The exactly two proper 2-colorings of the derived graph, global swaps of
// one another; the first places derived vertex 0 on side M1. Throws
// "modification not separating" when the derived graph is not bipartite.
std::pair<PartitionAssignment, PartitionAssignment> bipartitions(
    const GraphManifold& manifold, const Modification& modification);

}  // namespace graphmfd
