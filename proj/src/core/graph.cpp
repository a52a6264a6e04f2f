#include "core/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "core/error.hpp"

namespace graphmfd {

Multigraph to_multigraph(const GraphManifold& manifold) {
  Multigraph g;
  g.vertex_count = manifold.vertex_count();
  g.edges.reserve(manifold.edges.size());
  for (const Edge& e : manifold.edges) {
    g.edges.emplace_back(e.a.vertex, e.b.vertex);
  }
  return g;
}

Multigraph to_multigraph(const DerivedGraph& derived) {
  Multigraph g;
  g.vertex_count = derived.vertex_count();
  g.edges.reserve(derived.edges.size());
  for (const DerivedGraph::DEdge& e : derived.edges) {
    g.edges.emplace_back(e.u, e.v);
  }
  return g;
}

namespace {

// Adjacency lists in edge-index order, so traversals are deterministic.
std::vector<std::vector<std::pair<int, int>>> adjacency(const Multigraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count) {
      throw Error(ErrorCode::invalid, "edge endpoint out of range");
    }
    adj[u].emplace_back(v, e);
    if (u != v) adj[v].emplace_back(u, e);
  }
  return adj;
}

}  // namespace

bool is_connected(const Multigraph& graph) {
  if (graph.vertex_count <= 0) return false;
  auto adj = adjacency(graph);
  std::vector<char> seen(graph.vertex_count, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [w, e] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == graph.vertex_count;
}

CycleRankResult cycle_rank(const Multigraph& graph) {
  if (graph.vertex_count <= 0) {
    throw Error(ErrorCode::invalid, "graph not connected");
  }
  auto adj = adjacency(graph);
  CycleRankResult result;
  std::vector<char> seen(graph.vertex_count, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [w, e] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        result.spanning_tree.push_back(e);
        queue.push(w);
      }
    }
  }
  if (reached != graph.vertex_count) {
    throw Error(ErrorCode::invalid, "graph not connected");
  }
  result.ell = 1 - graph.vertex_count + graph.edge_count();
  return result;
}

OddCycleResult find_odd_cycle(const Multigraph& graph) {
  OddCycleResult result;

  // A self-loop is an odd closed walk of length one.
  for (int e = 0; e < graph.edge_count(); ++e) {
    auto [u, v] = graph.edges[e];
    if (u == v) {
      result.found = true;
      result.vertices = {u, u};
      result.edges = {e};
      return result;
    }
  }

  auto adj = adjacency(graph);
  std::vector<int> color(graph.vertex_count, -1);
  std::vector<int> parent_vertex(graph.vertex_count, -1);
  std::vector<int> parent_edge(graph.vertex_count, -1);
  std::vector<int> depth(graph.vertex_count, 0);

  for (int root = 0; root < graph.vertex_count; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [w, e] : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent_vertex[w] = v;
          parent_edge[w] = e;
          depth[w] = depth[v] + 1;
          queue.push(w);
        } else if (color[w] == color[v]) {
          // Tree paths to the meeting vertex plus the conflict edge close an
          // odd walk: both endpoints sit at depths of equal parity.
          std::vector<int> chain_v{v}, chain_w{w};
          std::vector<int> edges_v, edges_w;
          int x = v, y = w;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              edges_v.push_back(parent_edge[x]);
              x = parent_vertex[x];
              chain_v.push_back(x);
            } else {
              edges_w.push_back(parent_edge[y]);
              y = parent_vertex[y];
              chain_w.push_back(y);
            }
          }
          result.found = true;
          result.vertices = chain_v;  // v .. meeting vertex
          for (size_t i = chain_w.size() - 1; i-- > 0;) {
            result.vertices.push_back(chain_w[i]);  // .. down to w
          }
          result.vertices.push_back(v);
          result.edges = edges_v;
          for (size_t i = edges_w.size(); i-- > 0;) {
            result.edges.push_back(edges_w[i]);
          }
          result.edges.push_back(e);
          return result;
        }
      }
    }
  }
  return result;
}

namespace {

enum class EdgeKind : char { open, mono, bi };

// Branch-and-bound over 2-colorings of the base graph. Edges marked mono
// must be monochromatic (and each counts 1), edges marked bi must be
// bichromatic, open edges count 1 when monochromatic. Succeeds on the first
// coloring with total count <= limit; the roots of components are pinned to
// color 0, which is harmless under the global flip symmetry.
struct ColoringSearch {
  const Multigraph& graph;
  const std::vector<EdgeKind>& kind;
  int limit;

  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<int> order;
  std::vector<int> color;
  std::vector<int> loop_cost;  // per-vertex cost of its open self-loops
  bool found = false;
  std::vector<int> best;

  ColoringSearch(const Multigraph& g, const std::vector<EdgeKind>& k, int lim)
      : graph(g), kind(k), limit(lim), adj(adjacency(g)),
        color(g.vertex_count, -1), loop_cost(g.vertex_count, 0) {
    // BFS order keeps most edges incident to already-colored vertices.
    std::vector<char> seen(g.vertex_count, 0);
    for (int root = 0; root < g.vertex_count; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::queue<int> queue;
      queue.push(root);
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        order.push_back(v);
        for (auto [w, e] : adj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push(w);
          }
        }
      }
    }
  }

  bool run() {
    int base = 0;
    for (int e = 0; e < graph.edge_count(); ++e) {
      auto [u, v] = graph.edges[e];
      if (u != v) continue;
      switch (kind[e]) {
        case EdgeKind::bi:
          return false;  // a self-loop can never be bichromatic
        case EdgeKind::mono:
          base += 1;
          break;
        case EdgeKind::open:
          loop_cost[u] += 1;
          break;
      }
    }
    descend(0, base);
    return found;
  }

  void descend(size_t pos, int count) {
    if (found || count > limit) return;
    if (pos == order.size()) {
      found = true;
      best = color;
      return;
    }
    int v = order[pos];
    // The first vertex of each BFS component is pinned to color 0; the
    // count is invariant under the per-component flip.
    bool is_root = true;
    for (auto [w, e] : adj[v]) {
      if (w != v && color[w] != -1) {
        is_root = false;
        break;
      }
    }
    int last = is_root ? 0 : 1;
    for (int c = 0; c <= last && !found; ++c) {
      int added = loop_cost[v];
      bool ok = true;
      for (auto [w, e] : adj[v]) {
        if (w == v || color[w] == -1) continue;
        bool same = color[w] == c;
        switch (kind[e]) {
          case EdgeKind::mono:
            if (!same) ok = false;
            else added += 1;
            break;
          case EdgeKind::bi:
            if (same) ok = false;
            break;
          case EdgeKind::open:
            if (same) added += 1;
            break;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      color[v] = c;
      descend(pos + 1, count + added);
      color[v] = -1;
    }
  }
};

bool coloring_with_limit(const Multigraph& graph,
                         const std::vector<EdgeKind>& kind, int limit,
                         std::vector<int>* coloring_out) {
  ColoringSearch search(graph, kind, limit);
  if (!search.run()) return false;
  if (coloring_out) *coloring_out = search.best;
  return true;
}

int minimum_doubling_count(const Multigraph& graph) {
  std::vector<EdgeKind> kind(graph.edge_count(), EdgeKind::open);
  for (int limit = 0; limit <= graph.edge_count(); ++limit) {
    if (coloring_with_limit(graph, kind, limit, nullptr)) return limit;
  }
  throw Error(ErrorCode::internal, "doubling every edge must separate");
}

}  // namespace

Modification amalgamatable_modification(const GraphManifold& manifold) {
  Multigraph graph = to_multigraph(manifold);
  if (!is_connected(graph)) {
    throw Error(ErrorCode::invalid, "graph not connected");
  }
  int q = minimum_doubling_count(graph);

  // Lexicographically smallest optimal set: force edges in, lowest index
  // first, keeping an optimal completion reachable at every step.
  std::vector<EdgeKind> kind(graph.edge_count(), EdgeKind::open);
  std::vector<int> chosen;
  int cursor = 0;
  while (static_cast<int>(chosen.size()) < q) {
    bool advanced = false;
    for (int e = cursor; e < graph.edge_count(); ++e) {
      kind[e] = EdgeKind::mono;
      if (coloring_with_limit(graph, kind, q, nullptr)) {
        chosen.push_back(e);
        cursor = e + 1;
        advanced = true;
        break;
      }
      kind[e] = EdgeKind::bi;
    }
    if (!advanced) {
      throw Error(ErrorCode::internal, "optimal doubling set vanished");
    }
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (kind[e] == EdgeKind::open) kind[e] = EdgeKind::bi;
  }
  std::vector<int> coloring;
  if (!coloring_with_limit(graph, kind, q, &coloring)) {
    throw Error(ErrorCode::internal, "witness coloring vanished");
  }

  Modification mod;
  mod.doubled_edges = chosen;
  DerivedGraph derived = derive_graph(manifold, chosen);
  // Seifert vertex colors come from the witness; each subdivision vertex
  // takes the opposite side of its (monochromatic) endpoints.
  auto side_of = [&](int c) {
    return (c == coloring[0]) ? Side::m1 : Side::m2;
  };
  mod.bipartition.resize(derived.vertex_count());
  for (int v = 0; v < derived.seifert_count; ++v) {
    mod.bipartition[v] = side_of(coloring[v]);
  }
  for (int i = 0; i < static_cast<int>(derived.doubled.size()); ++i) {
    int u = manifold.edges[derived.doubled[i]].a.vertex;
    mod.bipartition[derived.seifert_count + i] =
        other_side(side_of(coloring[u]));
  }
  return mod;
}

int greedy_modification_size(const GraphManifold& manifold) {
  if (!is_connected(to_multigraph(manifold))) {
    throw Error(ErrorCode::invalid, "graph not connected");
  }
  std::vector<int> doubled;
  for (;;) {
    DerivedGraph derived = derive_graph(manifold, doubled);
    OddCycleResult odd = find_odd_cycle(to_multigraph(derived));
    if (!odd.found) return static_cast<int>(doubled.size());
    int pick = std::numeric_limits<int>::max();
    for (int de : odd.edges) {
      int orig = derived.edges[de].orig;
      if (!std::binary_search(doubled.begin(), doubled.end(), orig)) {
        pick = std::min(pick, orig);
      }
    }
    if (pick == std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::internal,
                  "odd cycle made of doubled edges only");
    }
    doubled.insert(std::lower_bound(doubled.begin(), doubled.end(), pick),
                   pick);
  }
}

std::pair<PartitionAssignment, PartitionAssignment> bipartitions(
    const GraphManifold& manifold, const Modification& modification) {
  DerivedGraph derived = derive_graph(manifold, modification.doubled_edges);
  Multigraph graph = to_multigraph(derived);
  auto adj = adjacency(graph);
  std::vector<int> color(graph.vertex_count, -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [w, e] : adj[v]) {
      if (w == v) {
        throw Error(ErrorCode::invalid, "modification not separating");
      }
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        ++reached;
        queue.push(w);
      } else if (color[w] == color[v]) {
        throw Error(ErrorCode::invalid, "modification not separating");
      }
    }
  }
  if (reached != graph.vertex_count) {
    throw Error(ErrorCode::invalid, "graph not connected");
  }
  PartitionAssignment first, second;
  first.side.resize(graph.vertex_count);
  second.side.resize(graph.vertex_count);
  for (int v = 0; v < graph.vertex_count; ++v) {
    first.side[v] = color[v] == 0 ? Side::m1 : Side::m2;
    second.side[v] = other_side(first.side[v]);
  }
  return {first, second};
}

}  // namespace graphmfd
