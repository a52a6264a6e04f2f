#include "core/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "core/error.hpp"
#include "core/genus.hpp"
#include "core/graph.hpp"

namespace graphmfd {

bool SplittingProfile::has_pseudohorizontal() const {
  return std::any_of(vertex.begin(), vertex.end(), [](const VertexSurface& s) {
    return s.cls == SurfaceClass::pseudohorizontal;
  });
}

bool SplittingProfile::has_horizontal() const {
  return std::any_of(vertex.begin(), vertex.end(), [](const VertexSurface& s) {
    return s.cls == SurfaceClass::horizontal;
  });
}

ValidationReport validate_profile(const GraphManifold& manifold,
                                  const SplittingProfile& profile) {
  ValidationReport report;
  auto flag = [&report](std::string path, std::string message) {
    report.violations.push_back({std::move(path), std::move(message)});
  };

  if (static_cast<int>(profile.vertex.size()) != manifold.vertex_count()) {
    flag("profile.classes", "one surface class required per Seifert piece");
    return report;
  }

  int active_designations = profile.active_edge ? 1 : 0;
  for (int v = 0; v < manifold.vertex_count(); ++v) {
    const VertexSurface& s = profile.vertex[v];
    const SeifertPiece& piece = manifold.vertices[v];
    std::string path = "profile.classes[" + std::to_string(v) + "]";
    switch (s.cls) {
      case SurfaceClass::horizontal:
        if (s.boundary < 1) {
          flag(path, "horizontal surface needs at least one boundary curve");
        }
        if (s.boundary < piece.boundary_count()) {
          flag(path,
               "horizontal surface must meet every boundary torus of the "
               "piece");
        }
        if (s.genus < 0) flag(path, "surface genus must be non-negative");
        if (s.copies < 1) flag(path, "copy count must be positive");
        if (piece.free_count() > 0) {
          flag(path, "free boundary can only lie on vertical pieces");
        }
        break;
      case SurfaceClass::pseudohorizontal:
        ++active_designations;
        if (s.boundary < 1) {
          flag(path, "pseudohorizontal surface needs boundary curves");
        }
        if (s.genus < 0) flag(path, "surface genus must be non-negative");
        if (piece.free_count() > 0) {
          flag(path, "free boundary can only lie on vertical pieces");
        }
        break;
      case SurfaceClass::vertical:
        break;
    }
  }
  if (active_designations > 1) {
    flag("profile", "at most one active designation is allowed");
  }
  if (profile.active_edge) {
    int e = profile.active_edge->edge;
    if (e < 0 || e >= manifold.edge_count()) {
      flag("profile.active_edge", "active edge index out of range");
    }
  }
  return report;
}

namespace {

void require_valid_profile(const GraphManifold& manifold,
                           const SplittingProfile& profile) {
  ValidationReport report = validate_profile(manifold, profile);
  if (!report.ok()) {
    throw Error(ErrorCode::invalid, report.violations.front().path + ": " +
                                        report.violations.front().message);
  }
}

// chi(S in N) of the active piece; 0 when nothing is active.
int active_chi(const SplittingProfile& profile) {
  if (profile.active_edge) return -2;
  for (const VertexSurface& s : profile.vertex) {
    if (s.cls == SurfaceClass::pseudohorizontal) {
      return 2 * (2 - 2 * s.genus - s.boundary) - 2;
    }
  }
  return 0;
}

}  // namespace

int tube_count_per_component(int g0, int m0) {
  if (m0 < 1) {
    throw Error(ErrorCode::invalid,
                "horizontal surface needs at least one boundary curve");
  }
  return 2 * g0 + m0 - 1;
}

int fundamental_complex_size(const SeifertPiece& piece) {
  const int g = piece.base_genus;
  const int m = piece.boundary_count();
  const int k = piece.fiber_count();
  int size = 2 * g + (m - 1) + std::max(k - 1, 0);
  // The complex cuts the piece into fibered solid tori; its size realizes
  // the one-sided amalgamation genus.
  PieceGenus one_sided = seifert_heegaard_genus(piece, piece.free_count(), true);
  if (size != one_sided.a) {
    throw Error(ErrorCode::internal, "fundamental 2-complex size mismatch");
  }
  return size;
}

VerticalC vertical_c(const SeifertPiece& piece, int boundary_free,
                     bool weighted) {
  const int g = piece.base_genus;
  const int m = piece.boundary_count();
  const int k = piece.fiber_count();
  VerticalC result;
  if (k >= 1 || (boundary_free >= 1 && !weighted)) {
    result.c = 2 * g + m + k - 2;
    result.extra_tube = false;
  } else {
    result.c = 2 * g + m - 2;
    result.extra_tube = true;
  }
  result.a = seifert_heegaard_genus(piece, boundary_free, weighted).a;
  if (result.a - result.c != (result.extra_tube ? 1 : 0)) {
    throw Error(ErrorCode::internal, "vertical tube count mismatch");
  }
  return result;
}

int splitting_genus(const GraphManifold& manifold,
                    const SplittingProfile& profile) {
  require_valid_profile(manifold, profile);
  int n = 0;
  int tubes = 0;
  for (const VertexSurface& s : profile.vertex) {
    if (s.cls != SurfaceClass::horizontal) continue;
    n += s.copies;
    tubes += s.copies * tube_count_per_component(s.genus, s.boundary);
  }
  if (n == 0 && !profile.active_edge && !profile.has_pseudohorizontal()) {
    throw Error(ErrorCode::invalid, "profile underdetermined");
  }
  int chi = active_chi(profile);
  return tubes - n - chi / 2 + 1;
}

BoundReport stabilization_bound(const GraphManifold& manifold,
                                const SplittingProfile& profile,
                                const Modification& modification) {
  BoundReport report;
  report.genus = splitting_genus(manifold, profile);
  report.amalgamation_genus =
      ideal_partition(manifold, modification).result.value;
  report.stabilizations =
      report.genus >= report.amalgamation_genus
          ? 1
          : report.amalgamation_genus - report.genus + 1;
  report.census_applies = !profile.has_horizontal() &&
                          !profile.has_pseudohorizontal() &&
                          profile.active_edge.has_value();
  report.census_stabilizations =
      std::max(report.amalgamation_genus - report.genus, 1);
  return report;
}

namespace {

// Plain integer max-flow, small instances only.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to, long long capacity) {
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  long long max_flow(int source, int sink) {
    long long total = 0;
    for (;;) {
      std::vector<int> parent_arc(head_.size(), -1);
      std::vector<char> seen(head_.size(), 0);
      std::queue<int> queue;
      queue.push(source);
      seen[source] = 1;
      while (!queue.empty() && !seen[sink]) {
        int v = queue.front();
        queue.pop();
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].capacity <= 0 || seen[arcs_[a].to]) continue;
          seen[arcs_[a].to] = 1;
          parent_arc[arcs_[a].to] = a;
          queue.push(arcs_[a].to);
        }
      }
      if (!seen[sink]) return total;
      long long push = std::numeric_limits<long long>::max();
      for (int v = sink; v != source;) {
        int a = parent_arc[v];
        push = std::min(push, arcs_[a].capacity);
        v = arcs_[a ^ 1].to;
      }
      for (int v = sink; v != source;) {
        int a = parent_arc[v];
        arcs_[a].capacity -= push;
        arcs_[a ^ 1].capacity += push;
        v = arcs_[a ^ 1].to;
      }
      total += push;
    }
  }

 private:
  struct Arc {
    int to;
    int next;
    long long capacity;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

constexpr long long kUnbounded = 1'000'000'000;

struct BudgetParts {
  // Per derived vertex.
  std::vector<long long> gross;        // tubes generated (horizontal-like)
  std::vector<long long> activations;  // deliveries needed to generate them
  std::vector<long long> demands;
  std::vector<long long> retained;
  std::vector<bool> extra_tube;
  int n = 0;
  std::optional<int> active_t2i;  // derived vertex of a doubled active edge
};

BudgetParts budget_parts(const GraphManifold& manifold,
                         const SplittingProfile& profile,
                         const DerivedGraph& derived,
                         const PartitionAssignment& assignment) {
  BudgetParts parts;
  int total = derived.vertex_count();
  parts.gross.assign(total, 0);
  parts.activations.assign(total, 0);
  parts.demands.assign(total, 0);
  parts.retained.assign(total, 0);
  parts.extra_tube.assign(total, false);

  if (profile.active_edge) {
    parts.active_t2i = derived.t2i_vertex_of(profile.active_edge->edge);
  }

  for (int v = 0; v < total; ++v) {
    if (derived.is_t2i_vertex(v)) {
      bool active = parts.active_t2i && *parts.active_t2i == v;
      parts.demands[v] = active ? 0 : 1;
      continue;
    }
    const SeifertPiece& piece = manifold.vertices[v];
    const VertexSurface& s = profile.vertex[v];
    switch (s.cls) {
      case SurfaceClass::horizontal:
        parts.n += s.copies;
        parts.gross[v] =
            static_cast<long long>(s.copies) *
            tube_count_per_component(s.genus, s.boundary);
        parts.activations[v] = s.copies;
        parts.retained[v] = fundamental_complex_size(piece);
        break;
      case SurfaceClass::pseudohorizontal:
        // Needs no stabilization of its own; -chi/2 tubes appear for free.
        parts.gross[v] = tube_count_per_component(s.genus, s.boundary);
        parts.retained[v] = fundamental_complex_size(piece);
        break;
      case SurfaceClass::vertical: {
        bool weighted = weighted_under(piece, assignment.side[v]);
        VerticalC vc = vertical_c(piece, piece.free_count(), weighted);
        parts.demands[v] = vc.a;
        parts.extra_tube[v] = vc.extra_tube;
        break;
      }
    }
  }
  return parts;
}

// Activation-order feasibility when trivial tubes may re-emerge anywhere:
// start from the stabilization tube, open product regions in descending
// tube-count order, and check the pool never starves and finally covers
// every demand and retained tube.
bool routed_teleport_feasible(const BudgetParts& parts,
                              const SplittingProfile& profile) {
  std::vector<long long> component_tubes;
  for (size_t v = 0; v < parts.gross.size(); ++v) {
    if (parts.activations[v] == 0) continue;
    long long per_component = parts.gross[v] / parts.activations[v];
    component_tubes.insert(component_tubes.end(), parts.activations[v],
                           per_component);
  }
  std::sort(component_tubes.rbegin(), component_tubes.rend());

  long long pool = 1;  // the stabilization
  if (profile.active_edge) pool += 1;
  for (size_t v = 0; v < parts.gross.size(); ++v) {
    if (parts.activations[v] == 0) pool += parts.gross[v];
  }
  for (long long t : component_tubes) {
    if (pool < 1) return false;
    pool += t - 1;
  }
  long long needed = std::accumulate(parts.demands.begin(),
                                     parts.demands.end(), 0LL) +
                     std::accumulate(parts.retained.begin(),
                                     parts.retained.end(), 0LL);
  return pool >= needed;
}

// Exact flow check when tubes move only along derived-graph edges and
// vertical pieces absorb whatever enters them. Node v splits into in/out;
// the stabilization is tried at every vertex.
bool routed_flow_feasible(const GraphManifold& manifold,
                          const BudgetParts& parts,
                          const SplittingProfile& profile,
                          const DerivedGraph& derived) {
  int total = derived.vertex_count();
  auto in_node = [](int v) { return 2 * v; };
  auto out_node = [](int v) { return 2 * v + 1; };
  int source = 2 * total;
  int sink = 2 * total + 1;
  int active_node = 2 * total + 2;

  // The stabilization lands in a horizontal piece whenever one exists;
  // only the all-vertical configurations stabilize elsewhere.
  std::vector<int> placements;
  for (int v = 0; v < derived.seifert_count; ++v) {
    if (profile.vertex[v].cls == SurfaceClass::horizontal) {
      placements.push_back(v);
    }
  }
  if (placements.empty()) {
    placements.resize(total);
    std::iota(placements.begin(), placements.end(), 0);
  }

  for (int placed : placements) {
    FlowNetwork net(2 * total + 3);
    long long required = 0;
    for (int v = 0; v < total; ++v) {
      bool vertical = !derived.is_t2i_vertex(v) &&
                      profile.vertex[v].cls == SurfaceClass::vertical;
      if (!vertical) net.add_edge(in_node(v), out_node(v), kUnbounded);
      long long balance =
          parts.gross[v] - parts.retained[v] - parts.activations[v];
      long long demand = parts.demands[v];
      if (v == placed) {
        // The stabilization serves this piece directly.
        if (demand > 0) {
          demand -= 1;
        } else {
          balance += 1;
        }
      }
      if (balance > 0) net.add_edge(source, out_node(v), balance);
      long long need = demand + (balance < 0 ? -balance : 0);
      if (need > 0) {
        net.add_edge(in_node(v), sink, need);
        required += need;
      }
    }
    for (const DerivedGraph::DEdge& e : derived.edges) {
      net.add_edge(out_node(e.u), in_node(e.v), kUnbounded);
      net.add_edge(out_node(e.v), in_node(e.u), kUnbounded);
    }
    if (profile.active_edge) {
      // The active edge manifold supplies one tube of its own, available
      // to either side.
      net.add_edge(source, active_node, 1);
      if (parts.active_t2i) {
        net.add_edge(active_node, in_node(*parts.active_t2i), kUnbounded);
      } else {
        const Edge& e = manifold.edges[profile.active_edge->edge];
        net.add_edge(active_node, in_node(e.a.vertex), kUnbounded);
        net.add_edge(active_node, in_node(e.b.vertex), kUnbounded);
      }
    }
    if (net.max_flow(source, sink) >= required) return true;
  }
  return false;
}

}  // namespace

TubeBudget tube_budget(const GraphManifold& manifold,
                       const SplittingProfile& profile,
                       const Modification& modification,
                       const PartitionAssignment& assignment, BudgetMode mode,
                       bool teleport) {
  require_valid_profile(manifold, profile);
  if (mode == BudgetMode::routed && manifold.edge_count() > 64) {
    throw Error(ErrorCode::unsupported, "instance too large for exact routing");
  }
  DerivedGraph derived = derive_graph(manifold, modification.doubled_edges);
  if (static_cast<int>(assignment.side.size()) != derived.vertex_count()) {
    throw Error(ErrorCode::invalid,
                "assignment does not match the derived graph");
  }
  int genus = splitting_genus(manifold, profile);
  BudgetParts parts = budget_parts(manifold, profile, derived, assignment);

  TubeBudget budget;
  budget.mode = mode;
  budget.teleport = teleport;
  budget.ideal_components = parts.n;
  budget.supply = static_cast<long long>(genus) + parts.n;
  budget.demands = parts.demands;
  budget.retained = parts.retained;
  budget.extra_tube = parts.extra_tube;
  budget.slack = budget.supply -
                 std::accumulate(parts.demands.begin(), parts.demands.end(),
                                 0LL) -
                 std::accumulate(parts.retained.begin(), parts.retained.end(),
                                 0LL);
  if (mode == BudgetMode::aggregate) {
    budget.feasible = budget.slack >= 0;
  } else if (teleport) {
    budget.feasible = routed_teleport_feasible(parts, profile);
  } else {
    budget.feasible = routed_flow_feasible(manifold, parts, profile, derived);
  }
  return budget;
}

CensusReport no_horizontal_census(const GraphManifold& manifold,
                                  const SplittingProfile& profile) {
  require_valid_profile(manifold, profile);
  if (profile.has_horizontal() || profile.has_pseudohorizontal() ||
      !profile.active_edge) {
    throw Error(ErrorCode::invalid, "census inapplicable");
  }
  const Edge& active = manifold.edges[profile.active_edge->edge];

  CensusReport report;
  Modification mod = amalgamatable_modification(manifold);
  report.exact = ideal_partition(manifold, mod).result.value;
  if (active.self_loop()) {
    report.configuration = 2;
    report.range_lo = 3;
    report.range_hi = 4;
    const SeifertPiece& piece = manifold.vertices[active.a.vertex];
    const int m = piece.boundary_count();
    const int k = piece.fiber_count();
    report.low_genus_criterion =
        piece.base_genus == 0 &&
        ((m == 2 && k <= 1) || (m == 3 && k == 0));
    report.note =
        "both tori of the doubled system lie on one vertical piece; the "
        "amalgamation genus is 3 exactly when the piece fibers over an "
        "annulus with at most one exceptional fiber or over a twice "
        "punctured disk with none";
  } else {
    report.configuration = 1;
    report.range_lo = 1;
    report.range_hi = 3;
    report.note =
        "two vertical pieces meet across the toggled edge manifold; the "
        "amalgamation genus depends on the boundary partition";
  }
  return report;
}

}  // namespace graphmfd
