#include "doctest.h"

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/genus.hpp"
#include "core/graph.hpp"
#include "core/manifest.hpp"
#include "core/report.hpp"

using namespace graphmfd;

TEST_CASE("small-genus family structure") {
  FamilyInstance family = small_genus_family(3);
  CHECK(family.manifold.vertex_count() == 4);  // planar piece + 2 + 1
  CHECK(family.manifold.edge_count() == 3);
  REQUIRE(validate(family.manifold).ok());
  REQUIRE(validate_profile(family.manifold, family.profile).ok());
  CHECK(family.profile.active_edge->edge == 2);
  CHECK(splitting_genus(family.manifold, family.profile) == 9);

  Modification mod = amalgamatable_modification(family.manifold);
  CHECK(mod.q() == 0);
  CHECK(ideal_partition(family.manifold, mod).result.value == 12);
  CHECK(family.closed_form_genus == 15);
}

TEST_CASE("small-genus family rejects m = 0") {
  CHECK_THROWS_AS(small_genus_family(0), Error);
}

TEST_CASE("small-genus generator output re-parses to itself") {
  FamilyInstance family = small_genus_family(2);
  std::string text = serialize_manifest(family.manifold, family.profile);
  ParsedManifest parsed = parse_manifest(text);
  CHECK(parsed.manifold == family.manifold);
  REQUIRE(parsed.profile.has_value());
  CHECK(parsed.profile->active_edge->edge == family.profile.active_edge->edge);
}

TEST_CASE("large-genus family numbers") {
  // chi(S) = (2 - 2) + 2 * (-5) = -10, so g = 6
  FamilyInstance family = large_genus_family(2, 3, -5);
  CHECK(splitting_genus(family.manifold, family.profile) == 6);

  // chi(S) = (2 - 8) + 8 * (-1) = -14, so g = 8
  FamilyInstance family2 = large_genus_family(3, 5, -1);
  CHECK(splitting_genus(family2.manifold, family2.profile) == 8);

  Modification mod = amalgamatable_modification(family.manifold);
  CHECK(ideal_partition(family.manifold, mod).result.value == 4);
  CHECK(family.closed_form_genus == 3);
}

TEST_CASE("large-genus family validates its parameters") {
  CHECK_THROWS_AS(large_genus_family(2, 4, -5), Error);   // not coprime
  CHECK_THROWS_AS(large_genus_family(1, 3, -5), Error);   // p < 2
  CHECK_THROWS_AS(large_genus_family(2, 3, -4), Error);   // even chi
  CHECK_THROWS_AS(large_genus_family(2, 3, 3), Error);    // chi > 1
  CHECK_THROWS_AS(large_genus_family(2, 3, -5, 1, 0), Error);  // k = 0
}

TEST_CASE("family reports carry the closed-form warning") {
  Report small = report_small_family(2, false);
  REQUIRE(small.warnings.size() == 1);
  CHECK(small.warnings[0].code == "closed-form-mismatch");
  CHECK(small.results["splitting_genus"] == 6);
  CHECK(small.results["amalgamation_genus"] == 8);

  Report large = report_large_family(2, 3, -7, 1, 1, false);
  REQUIRE(large.warnings.size() == 1);
  CHECK(large.results["splitting_genus"] == 8);
  CHECK(large.results["amalgamation_genus"] == 4);
}

TEST_CASE("reports are byte-deterministic") {
  Report a = report_small_family(2, false);
  Report b = report_small_family(2, false);
  CHECK(a.text == b.text);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
}
