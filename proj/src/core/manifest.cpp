#include "core/manifest.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

#include "core/error.hpp"

namespace graphmfd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::parse, path + ": " + message);
}

void reject_unknown_fields(const json& object, const std::string& path,
                           std::initializer_list<const char*> known) {
  for (const auto& item : object.items()) {
    bool ok = std::any_of(known.begin(), known.end(), [&](const char* name) {
      return item.key() == name;
    });
    if (!ok) fail(path, "unknown field \"" + item.key() + "\"");
  }
}

const json& require_field(const json& object, const std::string& path,
                          const char* name) {
  auto it = object.find(name);
  if (it == object.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

long long as_integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<long long>();
}

int as_int(const json& value, const std::string& path) {
  long long v = as_integer(value, path);
  if (v < -1000000000LL || v > 1000000000LL) fail(path, "integer out of range");
  return static_cast<int>(v);
}

const json& as_object(const json& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  return value;
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  return value;
}

SeifertPiece parse_vertex(const json& value, const std::string& path) {
  as_object(value, path);
  reject_unknown_fields(value, path, {"genus", "boundary", "fibers", "free_slots"});
  SeifertPiece piece;
  piece.base_genus = as_int(require_field(value, path, "genus"), path + ".genus");
  int boundary = as_int(require_field(value, path, "boundary"), path + ".boundary");
  if (boundary < 0 || boundary > 1000000) {
    fail(path + ".boundary", "boundary count out of range");
  }
  piece.slots.assign(boundary, SlotRole::jsj);
  if (auto it = value.find("fibers"); it != value.end()) {
    const json& fibers = as_array(*it, path + ".fibers");
    for (size_t i = 0; i < fibers.size(); ++i) {
      std::string fpath = path + ".fibers[" + std::to_string(i) + "]";
      const json& pair = as_array(fibers[i], fpath);
      if (pair.size() != 2) fail(fpath, "expected a [beta, alpha] pair");
      long long beta = as_integer(pair[0], fpath);
      long long alpha = as_integer(pair[1], fpath);
      piece.fibers.push_back(normalized_fiber(beta, alpha));
    }
  }
  if (auto it = value.find("free_slots"); it != value.end()) {
    const json& slots = as_array(*it, path + ".free_slots");
    for (size_t i = 0; i < slots.size(); ++i) {
      std::string spath = path + ".free_slots[" + std::to_string(i) + "]";
      const json& entry = as_object(slots[i], spath);
      reject_unknown_fields(entry, spath, {"slot", "side"});
      int slot = as_int(require_field(entry, spath, "slot"), spath + ".slot");
      int side = as_int(require_field(entry, spath, "side"), spath + ".side");
      if (slot < 0 || slot >= boundary) fail(spath + ".slot", "slot index out of range");
      if (side != 1 && side != 2) fail(spath + ".side", "side must be 1 or 2");
      if (piece.slots[slot] != SlotRole::jsj) fail(spath + ".slot", "slot listed twice");
      piece.slots[slot] = side == 1 ? SlotRole::free_side1 : SlotRole::free_side2;
    }
  }
  return piece;
}

EdgeEnd parse_edge_end(const json& value, const std::string& path) {
  const json& pair = as_array(value, path);
  if (pair.size() != 2) fail(path, "expected a [vertex, slot] pair");
  EdgeEnd end;
  end.vertex = as_int(pair[0], path);
  end.slot = as_int(pair[1], path);
  return end;
}

VertexSurface parse_class(const json& value, const std::string& path) {
  as_object(value, path);
  const json& cls = require_field(value, path, "class");
  if (!cls.is_string()) fail(path + ".class", "expected a string");
  std::string name = cls.get<std::string>();
  VertexSurface surface;
  if (name == "vertical") {
    reject_unknown_fields(value, path, {"class"});
    surface.cls = SurfaceClass::vertical;
  } else if (name == "horizontal") {
    reject_unknown_fields(value, path, {"class", "genus", "boundary", "copies"});
    surface.cls = SurfaceClass::horizontal;
    surface.genus = as_int(require_field(value, path, "genus"), path + ".genus");
    surface.boundary =
        as_int(require_field(value, path, "boundary"), path + ".boundary");
    surface.copies = as_int(require_field(value, path, "copies"), path + ".copies");
  } else if (name == "pseudohorizontal") {
    reject_unknown_fields(value, path, {"class", "genus", "boundary"});
    surface.cls = SurfaceClass::pseudohorizontal;
    surface.genus = as_int(require_field(value, path, "genus"), path + ".genus");
    surface.boundary =
        as_int(require_field(value, path, "boundary"), path + ".boundary");
  } else {
    fail(path + ".class",
         "expected \"horizontal\", \"vertical\" or \"pseudohorizontal\"");
  }
  return surface;
}

SplittingProfile parse_profile(const json& value, const std::string& path) {
  as_object(value, path);
  reject_unknown_fields(value, path, {"classes", "active_edge"});
  SplittingProfile profile;
  const json& classes = as_array(require_field(value, path, "classes"),
                                 path + ".classes");
  for (size_t i = 0; i < classes.size(); ++i) {
    profile.vertex.push_back(
        parse_class(classes[i], path + ".classes[" + std::to_string(i) + "]"));
  }
  if (auto it = value.find("active_edge"); it != value.end()) {
    std::string apath = path + ".active_edge";
    const json& entry = as_object(*it, apath);
    reject_unknown_fields(entry, apath, {"edge", "mode"});
    ActiveEdge active;
    active.edge = as_int(require_field(entry, apath, "edge"), apath + ".edge");
    const json& mode = require_field(entry, apath, "mode");
    if (!mode.is_string()) fail(apath + ".mode", "expected a string");
    std::string mode_name = mode.get<std::string>();
    if (mode_name == "aligned") {
      active.mode = EdgeMode::aligned;
    } else if (mode_name == "toggle") {
      active.mode = EdgeMode::toggle;
    } else {
      fail(apath + ".mode", "expected \"aligned\" or \"toggle\"");
    }
    profile.active_edge = active;
  }
  return profile;
}

std::string location_of(const json::exception& error, std::string_view text) {
  // nlohmann reports a byte offset in parse_error messages; recover
  // line/column by scanning.
  std::string message = error.what();
  auto pos = message.find("at byte ");
  size_t byte = 0;
  if (pos != std::string::npos) {
    byte = std::strtoull(message.c_str() + pos + 8, nullptr, 10);
  }
  size_t line = 1, column = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

ParsedManifest parse_manifest(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::exception& error) {
    throw Error(ErrorCode::parse, std::string("malformed document (") +
                                      location_of(error, text) + "): " +
                                      error.what());
  }
  if (!document.is_object()) fail("$", "expected an object");
  reject_unknown_fields(document, "$", {"vertices", "edges", "profile"});

  ParsedManifest parsed;
  const json& vertices = as_array(require_field(document, "$", "vertices"),
                                  "vertices");
  for (size_t i = 0; i < vertices.size(); ++i) {
    parsed.manifold.vertices.push_back(
        parse_vertex(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }
  const json& edges = as_array(require_field(document, "$", "edges"), "edges");
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string path = "edges[" + std::to_string(i) + "]";
    const json& entry = as_array(edges[i], path);
    if (entry.size() != 2) fail(path, "expected two endpoints");
    Edge edge;
    edge.a = parse_edge_end(entry[0], path + "[0]");
    edge.b = parse_edge_end(entry[1], path + "[1]");
    if (std::pair(edge.b.vertex, edge.b.slot) <
        std::pair(edge.a.vertex, edge.a.slot)) {
      std::swap(edge.a, edge.b);
    }
    parsed.manifold.edges.push_back(edge);
  }

  ValidationReport report = validate(parsed.manifold);
  if (!report.ok()) {
    std::string message;
    for (const Violation& v : report.violations) {
      if (!message.empty()) message += "; ";
      message += v.path + ": " + v.message;
    }
    throw Error(ErrorCode::invalid, message);
  }

  if (auto it = document.find("profile"); it != document.end()) {
    parsed.profile = parse_profile(*it, "profile");
    ValidationReport profile_report =
        validate_profile(parsed.manifold, *parsed.profile);
    if (!profile_report.ok()) {
      std::string message;
      for (const Violation& v : profile_report.violations) {
        if (!message.empty()) message += "; ";
        message += v.path + ": " + v.message;
      }
      throw Error(ErrorCode::invalid, message);
    }
  }
  return parsed;
}

std::string serialize_manifest(const GraphManifold& manifold,
                               const std::optional<SplittingProfile>& profile) {
  json document;
  document["vertices"] = json::array();
  for (const SeifertPiece& piece : manifold.vertices) {
    json vertex;
    vertex["genus"] = piece.base_genus;
    vertex["boundary"] = piece.boundary_count();
    vertex["fibers"] = json::array();
    for (const Fiber& f : piece.fibers) {
      vertex["fibers"].push_back({f.beta, f.alpha});
    }
    vertex["free_slots"] = json::array();
    for (int s = 0; s < piece.boundary_count(); ++s) {
      if (auto side = slot_side(piece.slots[s])) {
        vertex["free_slots"].push_back(
            {{"slot", s}, {"side", *side == Side::m1 ? 1 : 2}});
      }
    }
    document["vertices"].push_back(std::move(vertex));
  }
  document["edges"] = json::array();
  for (const Edge& edge : manifold.edges) {
    EdgeEnd a = edge.a, b = edge.b;
    if (std::pair(b.vertex, b.slot) < std::pair(a.vertex, a.slot)) {
      std::swap(a, b);
    }
    document["edges"].push_back(
        {{a.vertex, a.slot}, {b.vertex, b.slot}});
  }
  if (profile) {
    json classes = json::array();
    for (const VertexSurface& s : profile->vertex) {
      json entry;
      switch (s.cls) {
        case SurfaceClass::horizontal:
          entry["class"] = "horizontal";
          entry["genus"] = s.genus;
          entry["boundary"] = s.boundary;
          entry["copies"] = s.copies;
          break;
        case SurfaceClass::pseudohorizontal:
          entry["class"] = "pseudohorizontal";
          entry["genus"] = s.genus;
          entry["boundary"] = s.boundary;
          break;
        case SurfaceClass::vertical:
          entry["class"] = "vertical";
          break;
      }
      classes.push_back(std::move(entry));
    }
    document["profile"]["classes"] = std::move(classes);
    if (profile->active_edge) {
      document["profile"]["active_edge"] = {
          {"edge", profile->active_edge->edge},
          {"mode",
           profile->active_edge->mode == EdgeMode::aligned ? "aligned"
                                                           : "toggle"}};
    }
  }
  return document.dump(2) + "\n";
}

}  // namespace graphmfd
