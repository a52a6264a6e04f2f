#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/model.hpp"
#include "core/splitting.hpp"

namespace graphmfd {

struct ParsedManifest {
  GraphManifold manifold;
  std::optional<SplittingProfile> profile;
};

// Parses a manifest document:
//
//   {"vertices": [{"genus": 0, "boundary": 2, "fibers": [[1, 3], [2, 3]],
//                  "free_slots": [{"slot": 1, "side": 1}]}],
//    "edges": [[[0, 0], [1, 0]]],
//    "profile": {"classes": [...], "active_edge": {"edge": 0,
//                                                  "mode": "aligned"}}}
//
// Slots are 0-based; slots not listed in free_slots are glued. "fibers",
// "free_slots" and "profile" may be omitted. Unknown fields are rejected,
// not ignored. Errors carry the line/column of syntax problems or the
// field path of semantic ones, and the parsed manifold is validated.
ParsedManifest parse_manifest(std::string_view text);

// Canonical serialization: two-space indent, object keys sorted, fiber
// coefficients normalized. parse . serialize is the identity and
// serialize . parse . serialize is byte-stable.
std::string serialize_manifest(const GraphManifold& manifold,
                               const std::optional<SplittingProfile>& profile =
                                   std::nullopt);

}  // namespace graphmfd
