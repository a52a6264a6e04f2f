#pragma once

#include <optional>
#include <string>
#include <vector>

namespace graphmfd {

// One exceptional-fiber coefficient pair beta/alpha. A valid fiber has
// alpha >= 2, 0 <= beta < alpha and gcd(beta, alpha) = 1 (the attaching
// curve of the meridian must be primitive; the fraction is only defined
// up to adding integers, so beta is stored reduced modulo alpha).
struct Fiber {
  long long beta = 0;
  long long alpha = 2;

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

// Reduces beta into [0, alpha) when alpha >= 2. Pairs with alpha < 2 are
// returned unchanged so that validate() can report them.
Fiber normalized_fiber(long long beta, long long alpha);

// Role of one boundary torus of a Seifert piece: glued to a canonical
// torus, or free boundary of the ambient manifold assigned to side 1 or 2
// of the partition.
enum class SlotRole { jsj, free_side1, free_side2 };

// One Seifert fibered component, recorded as (g; m; b1/a1, ..., bk/ak)
// plus the role of each of its m boundary tori.
struct SeifertPiece {
  int base_genus = 0;
  std::vector<SlotRole> slots;
  std::vector<Fiber> fibers;

  int boundary_count() const { return static_cast<int>(slots.size()); }
  int fiber_count() const { return static_cast<int>(fibers.size()); }
  int jsj_count() const;
  int free_count() const;  // m_E, the number of ambient-boundary tori

  friend bool operator==(const SeifertPiece&, const SeifertPiece&) = default;
};

// chi of the base surface: 2 - 2g - m.
int euler_characteristic_base(const SeifertPiece& piece);

struct EdgeEnd {
  int vertex = 0;
  int slot = 0;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

// One canonical torus, glued between two jsj slots. Self-loops (both ends
// on the same vertex, distinct slots) are permitted.
struct Edge {
  EdgeEnd a;
  EdgeEnd b;

  bool self_loop() const { return a.vertex == b.vertex; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A graph manifold as a decorated multigraph: vertices are Seifert pieces,
// edges are canonical tori.
struct GraphManifold {
  std::vector<SeifertPiece> vertices;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const GraphManifold&, const GraphManifold&) = default;
};

struct Violation {
  std::string path;  // e.g. "vertices[2].fibers[0]"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every structural invariant: boundary counts, fiber coefficients,
// slot/edge bookkeeping, nonempty torus system, connectivity.
ValidationReport validate(const GraphManifold& manifold);

// Side labels for the mutual-separation bipartition.
enum class Side : int { m1 = 1, m2 = 2 };

inline Side other_side(Side s) { return s == Side::m1 ? Side::m2 : Side::m1; }

// Free-slot roles carry a fixed side of the ambient partition.
std::optional<Side> slot_side(SlotRole role);

// The derived graph of a modification: each doubled edge is subdivided by
// a vertex standing for the T^2 x I piece between the two parallel tori.
// Derived vertices 0..n-1 are the Seifert vertices; vertex n+i is the
// subdivision vertex of doubled[i].
struct DerivedGraph {
  struct DEdge {
    int u = 0;
    int v = 0;
    int orig = 0;  // index of the originating edge in the base manifold
  };

  int seifert_count = 0;
  std::vector<int> doubled;  // sorted original edge indices
  std::vector<DEdge> edges;

  int vertex_count() const {
    return seifert_count + static_cast<int>(doubled.size());
  }
  bool is_t2i_vertex(int v) const { return v >= seifert_count; }
  int orig_edge_of(int t2i_vertex) const {
    return doubled[t2i_vertex - seifert_count];
  }
  // Subdivision vertex of an original edge, if that edge is doubled.
  std::optional<int> t2i_vertex_of(int orig_edge) const;
};

DerivedGraph derive_graph(const GraphManifold& manifold,
                          const std::vector<int>& doubled_edges);

// A set of doubled edges together with a witness bipartition of the
// derived graph (vertex 0 on side M1 by convention).
struct Modification {
  std::vector<int> doubled_edges;  // sorted
  std::vector<Side> bipartition;   // one entry per derived vertex

  int q() const { return static_cast<int>(doubled_edges.size()); }
};

// One of the two natural boundary partitions induced by a modification:
// piece X carries its derived-torus annuli on side[X]; free boundary keeps
// its declared side.
struct PartitionAssignment {
  std::vector<Side> side;  // one entry per derived vertex
};

}  // namespace graphmfd
