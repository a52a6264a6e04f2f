#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace graphmfd {

enum class SurfaceClass { horizontal, vertical, pseudohorizontal };
enum class EdgeMode { aligned, toggle };

// Data of one splitting-surface piece inside a Seifert component.
// Horizontal: the surface is 2*copies parallel copies of a surface of the
// given genus and boundary count, bounding `copies` product regions that
// each need a tube delivered. Pseudohorizontal: the surface is the connect
// sum of two copies of a (genus, boundary) surface; it is the active piece
// and needs no delivery.
struct VertexSurface {
  SurfaceClass cls = SurfaceClass::vertical;
  int genus = 0;
  int boundary = 0;
  int copies = 1;  // horizontal only
};

struct ActiveEdge {
  int edge = 0;
  EdgeMode mode = EdgeMode::aligned;
};

// Active-position description of a strongly irreducible splitting: one
// surface class per Seifert vertex and at most one active designation in
// total (a pseudohorizontal vertex or an edge manifold).
struct SplittingProfile {
  std::vector<VertexSurface> vertex;
  std::optional<ActiveEdge> active_edge;

  bool has_pseudohorizontal() const;
  bool has_horizontal() const;
};

ValidationReport validate_profile(const GraphManifold& manifold,
                                  const SplittingProfile& profile);

// Tubes generated by one product region of a horizontal piece whose
// surface has genus g0 and m0 >= 1 boundary curves: 1 - chi = 2g0 + m0 - 1.
int tube_count_per_component(int g0, int m0);

// Number of annuli in a fundamental 2-complex: 2g + (m-1) + max(k-1, 0).
// Always equals a(X) for the partition carrying all of the boundary on one
// side; the equality is asserted.
int fundamental_complex_size(const SeifertPiece& piece);

struct VerticalC {
  int c = 0;
  int a = 0;
  // True when a = c + 1 (the k = 0, one-sided-boundary branch): meeting the
  // a(Y) demand consumes one extra tube that comes back trivial.
  bool extra_tube = false;
};

// Tube demand of a vertical piece: c = 2g + m + k - 2 in the standard
// branch, 2g + m - 2 otherwise, with a(Y) - c(Y) in {0, 1}.
VerticalC vertical_c(const SeifertPiece& piece, int boundary_free,
                     bool weighted);

// Genus of the splitting from Euler-characteristic accounting:
//   g = sum(t_i) - n - chi(S in N)/2 + 1
// over the n product regions of the horizontal pieces, where the active
// piece contributes chi = -2 (edge manifold) or 2(2 - 2g_N - m_N) - 2
// (pseudohorizontal). A profile with neither horizontal pieces nor an
// active designation is rejected as "profile underdetermined".
int splitting_genus(const GraphManifold& manifold,
                    const SplittingProfile& profile);

struct BoundReport {
  int genus = 0;
  int amalgamation_genus = 0;
  int stabilizations = 0;  // 1 when genus >= a, else a - genus + 1
  // Set when the no-horizontal census applies; the two-vertical-piece
  // construction then reaches an amalgamation with max(a - genus, 1)
  // stabilizations, one fewer than the general bound.
  bool census_applies = false;
  int census_stabilizations = 0;
};

BoundReport stabilization_bound(const GraphManifold& manifold,
                                const SplittingProfile& profile,
                                const Modification& modification);

enum class BudgetMode { aggregate, routed };

// Tube accounting after one stabilization. Supply is g + (n - 1) + 1 (the
// added tube); each horizontal piece retains a(X) tubes, each plain
// T^2 x I piece consumes one, each vertical piece consumes a(Y), and the
// active edge manifold consumes nothing. Aggregate feasibility is
// slack >= 0. Routed mode transports tubes only along derived-graph edges:
// with teleport, trivial tubes may re-emerge anywhere and only the
// activation order binds; without it vertical pieces absorb whatever
// enters them and feasibility is an exact integer max-flow check.
struct TubeBudget {
  long long supply = 0;
  std::vector<long long> demands;   // per derived vertex
  std::vector<long long> retained;  // per derived vertex
  std::vector<bool> extra_tube;     // per derived vertex, vertical_c flag
  long long slack = 0;
  bool feasible = false;
  int ideal_components = 0;  // n
  BudgetMode mode = BudgetMode::aggregate;
  bool teleport = true;
};

TubeBudget tube_budget(const GraphManifold& manifold,
                       const SplittingProfile& profile,
                       const Modification& modification,
                       const PartitionAssignment& assignment, BudgetMode mode,
                       bool teleport = true);

struct CensusReport {
  int configuration = 0;  // 1: two pieces across the active edge, 2: self-loop
  int range_lo = 0;
  int range_hi = 0;
  int exact = 0;  // amalgamation genus from the ideal partition
  // Configuration 2 only: the piece fibers over an annulus with at most one
  // exceptional fiber or over a twice-punctured disk with none, which pins
  // the genus to the low end of the range.
  bool low_genus_criterion = false;
  std::string note;
};

// Classifies an all-vertical profile whose active component is an edge
// manifold. Profiles with a horizontal or pseudohorizontal piece are
// rejected as "census inapplicable".
CensusReport no_horizontal_census(const GraphManifold& manifold,
                                  const SplittingProfile& profile);

}  // namespace graphmfd
