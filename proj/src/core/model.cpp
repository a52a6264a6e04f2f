#include "core/model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "core/error.hpp"

namespace graphmfd {

Fiber normalized_fiber(long long beta, long long alpha) {
  Fiber f{beta, alpha};
  if (alpha >= 2) {
    f.beta = ((beta % alpha) + alpha) % alpha;
  }
  return f;
}

int SeifertPiece::jsj_count() const {
  return static_cast<int>(
      std::count(slots.begin(), slots.end(), SlotRole::jsj));
}

int SeifertPiece::free_count() const {
  return boundary_count() - jsj_count();
}

int euler_characteristic_base(const SeifertPiece& piece) {
  return 2 - 2 * piece.base_genus - piece.boundary_count();
}

std::optional<Side> slot_side(SlotRole role) {
  switch (role) {
    case SlotRole::free_side1:
      return Side::m1;
    case SlotRole::free_side2:
      return Side::m2;
    default:
      return std::nullopt;
  }
}

namespace {

std::string vertex_path(int v) { return "vertices[" + std::to_string(v) + "]"; }

std::string edge_path(int e) { return "edges[" + std::to_string(e) + "]"; }

bool connected(const GraphManifold& m) {
  if (m.vertices.empty()) return false;
  std::vector<std::vector<int>> adj(m.vertices.size());
  for (const Edge& e : m.edges) {
    if (e.a.vertex < 0 || e.a.vertex >= m.vertex_count()) continue;
    if (e.b.vertex < 0 || e.b.vertex >= m.vertex_count()) continue;
    adj[e.a.vertex].push_back(e.b.vertex);
    adj[e.b.vertex].push_back(e.a.vertex);
  }
  std::vector<char> seen(m.vertices.size(), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

ValidationReport validate(const GraphManifold& manifold) {
  ValidationReport report;
  auto flag = [&report](std::string path, std::string message) {
    report.violations.push_back({std::move(path), std::move(message)});
  };

  if (manifold.vertices.empty()) {
    flag("vertices", "manifold has no Seifert pieces");
    return report;
  }

  for (int v = 0; v < manifold.vertex_count(); ++v) {
    const SeifertPiece& piece = manifold.vertices[v];
    if (piece.base_genus < 0) {
      flag(vertex_path(v) + ".genus", "base genus must be non-negative");
    }
    if (piece.boundary_count() < 1) {
      flag(vertex_path(v) + ".boundary",
           "every Seifert piece must have boundary");
    }
    for (int i = 0; i < piece.fiber_count(); ++i) {
      const Fiber& f = piece.fibers[i];
      std::string path =
          vertex_path(v) + ".fibers[" + std::to_string(i) + "]";
      if (f.alpha < 2) {
        flag(path, "exceptional-fiber multiplicity must be at least 2");
        continue;
      }
      if (f.beta < 0 || f.beta >= f.alpha) {
        flag(path, "fiber coefficient not normalized to [0, alpha)");
      }
      if (std::gcd(f.beta, f.alpha) != 1) {
        flag(path, "fiber fraction not in lowest terms");
      }
    }
  }

  if (manifold.edges.empty()) {
    flag("edges", "the torus system must be nonempty");
  }

  // Each jsj slot must be used by exactly one edge endpoint, free slots by
  // none; this forces degrees to match the slot decoration.
  std::vector<std::vector<int>> slot_use(manifold.vertex_count());
  for (int v = 0; v < manifold.vertex_count(); ++v) {
    slot_use[v].assign(manifold.vertices[v].boundary_count(), 0);
  }
  for (int e = 0; e < manifold.edge_count(); ++e) {
    const Edge& edge = manifold.edges[e];
    const EdgeEnd ends[2] = {edge.a, edge.b};
    for (const EdgeEnd& end : ends) {
      if (end.vertex < 0 || end.vertex >= manifold.vertex_count()) {
        flag(edge_path(e), "edge endpoint references a missing vertex");
        continue;
      }
      const SeifertPiece& piece = manifold.vertices[end.vertex];
      if (end.slot < 0 || end.slot >= piece.boundary_count()) {
        flag(edge_path(e), "edge endpoint references a missing slot");
        continue;
      }
      if (piece.slots[end.slot] != SlotRole::jsj) {
        flag(edge_path(e), "edge attached to a free boundary slot");
        continue;
      }
      slot_use[end.vertex][end.slot] += 1;
    }
    if (edge.self_loop() && edge.a.slot == edge.b.slot) {
      flag(edge_path(e), "self-loop uses the same slot twice");
    }
  }
  for (int v = 0; v < manifold.vertex_count(); ++v) {
    const SeifertPiece& piece = manifold.vertices[v];
    for (int s = 0; s < piece.boundary_count(); ++s) {
      if (piece.slots[s] != SlotRole::jsj) continue;
      if (slot_use[v][s] == 0) {
        flag(vertex_path(v) + ".slots[" + std::to_string(s) + "]",
             "unused slot");
      } else if (slot_use[v][s] > 1) {
        flag(vertex_path(v) + ".slots[" + std::to_string(s) + "]",
             "slot used by more than one edge endpoint");
      }
    }
  }

  if (!connected(manifold)) {
    flag("edges", "graph not connected");
  }

  return report;
}

std::optional<int> DerivedGraph::t2i_vertex_of(int orig_edge) const {
  auto it = std::lower_bound(doubled.begin(), doubled.end(), orig_edge);
  if (it == doubled.end() || *it != orig_edge) return std::nullopt;
  return seifert_count + static_cast<int>(it - doubled.begin());
}

DerivedGraph derive_graph(const GraphManifold& manifold,
                          const std::vector<int>& doubled_edges) {
  DerivedGraph derived;
  derived.seifert_count = manifold.vertex_count();
  derived.doubled = doubled_edges;
  std::sort(derived.doubled.begin(), derived.doubled.end());
  for (int e : derived.doubled) {
    if (e < 0 || e >= manifold.edge_count()) {
      throw Error(ErrorCode::invalid, "doubled edge index out of range");
    }
  }
  if (std::adjacent_find(derived.doubled.begin(), derived.doubled.end()) !=
      derived.doubled.end()) {
    throw Error(ErrorCode::invalid, "doubled edge listed twice");
  }
  for (int e = 0; e < manifold.edge_count(); ++e) {
    const Edge& edge = manifold.edges[e];
    if (auto mid = derived.t2i_vertex_of(e)) {
      derived.edges.push_back({edge.a.vertex, *mid, e});
      derived.edges.push_back({*mid, edge.b.vertex, e});
    } else {
      derived.edges.push_back({edge.a.vertex, edge.b.vertex, e});
    }
  }
  return derived;
}

}  // namespace graphmfd
