#pragma once

#include <vector>

#include "core/model.hpp"

namespace graphmfd {

// Which branch of the Heegaard-genus formula applied to a partitioned
// Seifert piece: the standard genus 2g + m + k - 1, or 2g + m when k = 0
// and every boundary torus lands in the same compression body.
enum class GenusBranch { standard, one_sided };

struct PieceGenus {
  int g_h = 0;
  int a = 0;  // always g_h - 1
  GenusBranch branch = GenusBranch::standard;
  bool weighted = false;
};

// Heegaard genus of a partitioned Seifert piece with m_E free boundary
// tori. "weighted" means the free boundary is nonempty and sits on the
// same side as the piece's torus-system annuli, so that all of the
// boundary lies in one compression body.
PieceGenus seifert_heegaard_genus(const SeifertPiece& piece, int boundary_free,
                                  bool weighted);

// Derives the weighted flag for a piece whose torus-system annuli lie on
// theta_side: true when the piece has free boundary and none of it sits on
// the opposite side.
bool weighted_under(const SeifertPiece& piece, Side theta_side);

// Genus of an amalgamation along a surface with the given per-component
// genera: sum of piece genera, minus the surface genus, plus the cycle
// rank of the decomposition graph.
int amalgamation_genus_general(const std::vector<int>& piece_genera,
                               const std::vector<int>& surface_genera,
                               int ell);

struct AmalgamationGenusResult {
  int value = 0;          // sum of a(X_i) over Seifert pieces, + q + 1
  int general_value = 0;  // sum g_h - |torus system| + ell; equal by theorem
  int q = 0;
  int ell = 0;
  PartitionAssignment partition_used;
  std::vector<PieceGenus> per_piece;  // one entry per derived vertex
};

// Amalgamation genus for one of the two partition assignments. Both
// formulas are evaluated; a disagreement throws "genus cross-check failed"
// (an implementation bug, never expected).
AmalgamationGenusResult amalgamation_genus(const GraphManifold& manifold,
                                           const Modification& modification,
                                           const PartitionAssignment& assignment);

struct IdealPartitionResult {
  PartitionAssignment assignment;
  AmalgamationGenusResult result;
  AmalgamationGenusResult other;  // the rejected assignment, for reports
};

// Evaluates both assignments and keeps the minimizer; ties go to the
// assignment placing derived vertex 0 on side M1.
IdealPartitionResult ideal_partition(const GraphManifold& manifold,
                                     const Modification& modification);

}  // namespace graphmfd
