#include "core/families.hpp"

#include <numeric>

#include "core/error.hpp"

namespace graphmfd {

namespace {

SeifertPiece disk_piece(int boundary, std::vector<Fiber> fibers) {
  SeifertPiece piece;
  piece.base_genus = 0;
  piece.slots.assign(boundary, SlotRole::jsj);
  piece.fibers = std::move(fibers);
  return piece;
}

}  // namespace

FamilyInstance small_genus_family(int m) {
  if (m < 1) {
    throw Error(ErrorCode::invalid, "family parameter m must be positive");
  }
  FamilyInstance instance;
  instance.family = "small-genus";
  GraphManifold& manifold = instance.manifold;

  // Vertex 0: the horizontal piece over an m-holed sphere.
  manifold.vertices.push_back(
      disk_piece(m, {normalized_fiber(1, 3), normalized_fiber(2, 3)}));
  // Vertices 1..m-1: vertical pieces over a disk with four fibers.
  for (int i = 1; i < m; ++i) {
    manifold.vertices.push_back(disk_piece(
        1, {normalized_fiber(1, 2), normalized_fiber(1, 2),
            normalized_fiber(1, 2), normalized_fiber(1, 2)}));
  }
  // Vertex m: the vertical piece over a disk with three fibers, across the
  // active edge manifold.
  manifold.vertices.push_back(
      disk_piece(1, {normalized_fiber(1, 2), normalized_fiber(1, 2),
                     normalized_fiber(1, 2)}));

  for (int i = 1; i < m; ++i) {
    manifold.edges.push_back({{0, i}, {i, 0}});
  }
  manifold.edges.push_back({{0, 0}, {m, 0}});

  SplittingProfile& profile = instance.profile;
  profile.vertex.resize(m + 1);
  profile.vertex[0] = {SurfaceClass::horizontal, 0, 3 * m, 1};
  for (int i = 1; i <= m; ++i) {
    profile.vertex[i] = {SurfaceClass::vertical, 0, 0, 1};
  }
  profile.active_edge = ActiveEdge{m - 1, EdgeMode::aligned};

  instance.closed_form_genus = 4 * m + 3;
  return instance;
}

FamilyInstance large_genus_family(int p, int q, int chi_f, int base_genus,
                                  int fiber_count) {
  if (p < 2 || q < 2) {
    throw Error(ErrorCode::invalid, "torus-knot parameters must be at least 2");
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::invalid, "torus-knot parameters must be coprime");
  }
  if (chi_f > 1 || chi_f % 2 == 0) {
    throw Error(ErrorCode::invalid,
                "a one-holed horizontal surface has odd Euler characteristic "
                "at most 1");
  }
  if (base_genus < 0 || fiber_count < 1) {
    throw Error(ErrorCode::invalid,
                "the glued piece needs non-negative genus and at least one "
                "exceptional fiber");
  }

  FamilyInstance instance;
  instance.family = "large-genus";
  GraphManifold& manifold = instance.manifold;

  manifold.vertices.push_back(
      disk_piece(1, {normalized_fiber(1, p), normalized_fiber(1, q)}));
  SeifertPiece glued;
  glued.base_genus = base_genus;
  glued.slots.assign(1, SlotRole::jsj);
  for (int i = 0; i < fiber_count; ++i) {
    glued.fibers.push_back(normalized_fiber(1, 2));
  }
  manifold.vertices.push_back(glued);
  manifold.edges.push_back({{0, 0}, {1, 0}});

  // (p-1)(q-1) is even: p and q cannot both be even.
  int punctures = (p - 1) * (q - 1);
  int pairs = punctures / 2;

  SplittingProfile& profile = instance.profile;
  profile.vertex.resize(2);
  profile.vertex[0] = {SurfaceClass::pseudohorizontal, 0, pairs, 1};
  profile.vertex[1] = {SurfaceClass::horizontal, (1 - chi_f) / 2, 1, pairs};

  instance.closed_form_genus = 2 * base_genus + fiber_count;
  return instance;
}

}  // namespace graphmfd
