#pragma once

#include <string>

#include "core/model.hpp"
#include "core/splitting.hpp"

namespace graphmfd {

struct FamilyInstance {
  GraphManifold manifold;
  SplittingProfile profile;
  std::string family;           // "small-genus" or "large-genus"
  int closed_form_genus = 0;    // the classical closed-form a(M) value
};

// The small-genus family with parameter m >= 1: a planar-horizontal piece
// (0; m; 1/3, 2/3) carrying two copies of a 3m-holed sphere, m-1 vertical
// pieces over a disk with four exceptional fibers, an aligned active edge
// manifold, and one vertical piece over a disk with three exceptional
// fibers. The splitting has genus 3m. The classical closed-form value for
// a(M) is 4m + 3; the construction as stated evaluates to 4m, which the
// reports flag.
FamilyInstance small_genus_family(int m);

// The large-genus family: a torus-knot exterior (0; 1; 1/p, 1/q) carrying
// a pseudohorizontal bridge surface with (p-1)(q-1) boundary curves, glued
// to a piece (g; 1; k fibers) carrying (p-1)(q-1) copies of a one-holed
// horizontal surface of Euler characteristic chi_f (odd, at most 1).
// Splitting genus follows from the Euler-characteristic sum; the classical
// closed-form value for a(M) is 2g + k, while the formulas give 2g + k + 1.
FamilyInstance large_genus_family(int p, int q, int chi_f, int base_genus = 1,
                                  int fiber_count = 1);

}  // namespace graphmfd
