#include "core/genus.hpp"

#include <numeric>

#include "core/error.hpp"
#include "core/graph.hpp"

namespace graphmfd {

PieceGenus seifert_heegaard_genus(const SeifertPiece& piece, int boundary_free,
                                  bool weighted) {
  const int g = piece.base_genus;
  const int m = piece.boundary_count();
  const int k = piece.fiber_count();
  PieceGenus result;
  result.weighted = weighted;
  if (k >= 1 || (boundary_free >= 1 && !weighted)) {
    result.branch = GenusBranch::standard;
    result.g_h = 2 * g + m + k - 1;
  } else {
    result.branch = GenusBranch::one_sided;
    result.g_h = 2 * g + m;
  }
  result.a = result.g_h - 1;
  return result;
}

bool weighted_under(const SeifertPiece& piece, Side theta_side) {
  if (piece.free_count() == 0) return false;
  for (SlotRole role : piece.slots) {
    auto side = slot_side(role);
    if (side && *side != theta_side) return false;
  }
  return true;
}

int amalgamation_genus_general(const std::vector<int>& piece_genera,
                               const std::vector<int>& surface_genera,
                               int ell) {
  int sum = std::accumulate(piece_genera.begin(), piece_genera.end(), 0);
  int g_f = std::accumulate(surface_genera.begin(), surface_genera.end(), 0);
  return sum - g_f + ell;
}

AmalgamationGenusResult amalgamation_genus(
    const GraphManifold& manifold, const Modification& modification,
    const PartitionAssignment& assignment) {
  DerivedGraph derived = derive_graph(manifold, modification.doubled_edges);
  if (static_cast<int>(assignment.side.size()) != derived.vertex_count()) {
    throw Error(ErrorCode::invalid,
                "assignment does not match the derived graph");
  }

  AmalgamationGenusResult result;
  result.q = modification.q();
  result.partition_used = assignment;
  result.per_piece.resize(derived.vertex_count());

  int sum_a = 0;
  std::vector<int> genera;
  genera.reserve(derived.vertex_count());
  for (int v = 0; v < derived.vertex_count(); ++v) {
    if (derived.is_t2i_vertex(v)) {
      // A piece between two parallel tori carries all of its boundary on
      // one side of the partition, so its genus is always 2.
      result.per_piece[v] = {2, 1, GenusBranch::one_sided, false};
    } else {
      const SeifertPiece& piece = manifold.vertices[v];
      bool weighted = weighted_under(piece, assignment.side[v]);
      result.per_piece[v] =
          seifert_heegaard_genus(piece, piece.free_count(), weighted);
      sum_a += result.per_piece[v].a;
    }
    genera.push_back(result.per_piece[v].g_h);
  }
  result.value = sum_a + result.q + 1;

  result.ell = cycle_rank(to_multigraph(derived)).ell;
  std::vector<int> torus_genera(derived.edges.size(), 1);
  result.general_value =
      amalgamation_genus_general(genera, torus_genera, result.ell);
  if (result.general_value != result.value) {
    throw Error(ErrorCode::internal, "genus cross-check failed");
  }
  return result;
}

IdealPartitionResult ideal_partition(const GraphManifold& manifold,
                                     const Modification& modification) {
  auto [first, second] = bipartitions(manifold, modification);
  AmalgamationGenusResult r1 = amalgamation_genus(manifold, modification, first);
  AmalgamationGenusResult r2 =
      amalgamation_genus(manifold, modification, second);
  // first has derived vertex 0 on M1, which wins ties.
  if (r2.value < r1.value) {
    return {second, std::move(r2), std::move(r1)};
  }
  return {first, std::move(r1), std::move(r2)};
}

}  // namespace graphmfd
