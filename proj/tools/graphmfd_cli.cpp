// Command-line front end for the graphmfd shared library. Talks to the
// library exclusively through the public C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graphmfd/graphmfd.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;       // parse or validation failure
constexpr int kExitInfeasible = 2;  // infeasible budget or oracle mismatch

bool read_file(const std::string& path, std::string* out) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) return false;
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  *out = buffer.str();
  return true;
}

int fail(gm_status status, char* message) {
  std::cerr << "error: " << (message ? message : "unknown failure") << "\n";
  gm_string_free(message);
  (void)status;
  return kExitError;
}

// Prints the report and converts its flags into the exit code.
int emit(gm_report* report, bool json_mode) {
  if (json_mode) {
    std::cout << gm_report_json(report);
  } else {
    std::cout << gm_report_text(report);
  }
  int code = kExitOk;
  if (gm_report_feasible(report) == 0) code = kExitInfeasible;
  if (gm_report_oracle_ok(report) == 0) code = kExitInfeasible;
  gm_report_free(report);
  return code;
}

int load_manifold(const std::string& path, gm_manifold** manifold) {
  std::string text;
  if (!read_file(path, &text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitError;
  }
  char* message = nullptr;
  gm_status status =
      gm_manifold_parse(text.c_str(), text.size(), manifold, &message);
  if (status != GM_OK) return fail(status, message);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of Heegaard splittings of graph manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false;
  bool oracle = false;
  app.add_flag("--json", json_mode, "emit the machine-readable report");
  app.add_flag("--oracle", oracle, "run brute-force cross-checks");

  std::string manifest_path;

  auto* genus = app.add_subcommand(
      "genus", "amalgamation genus under both assignments");
  genus->fallthrough();
  genus->add_option("manifest", manifest_path, "manifest file")->required();

  auto* modify = app.add_subcommand(
      "modify", "minimal separating modification of the torus system");
  modify->fallthrough();
  modify->add_option("manifest", manifest_path, "manifest file")->required();

  auto* bound = app.add_subcommand(
      "bound", "splitting genus and stabilization bound");
  bound->fallthrough();
  bound->add_option("manifest", manifest_path, "manifest file")->required();

  bool routed = false;
  bool no_teleport = false;
  auto* check = app.add_subcommand("check", "tube-budget feasibility");
  check->fallthrough();
  check->add_option("manifest", manifest_path, "manifest file")->required();
  check->add_flag("--routed", routed,
                  "transport tubes only along derived-graph edges");
  check->add_flag("--no-teleport", no_teleport,
                  "forbid global re-routing of trivial tubes");

  auto* examples =
      app.add_subcommand("examples", "emit a bundled example family");
  examples->fallthrough();
  examples->require_subcommand(1);
  long family_m = 1;
  auto* small = examples->add_subcommand("small-genus",
                                         "low-genus splitting family");
  small->fallthrough();
  small->add_option("--m", family_m, "number of holes parameter")->required();
  long family_p = 2, family_q = 3, family_chi = -5;
  long family_g = 1, family_k = 1;
  auto* large = examples->add_subcommand("large-genus",
                                         "high-genus splitting family");
  large->fallthrough();
  large->add_option("--p", family_p, "first torus-knot parameter")->required();
  large->add_option("--q", family_q, "second torus-knot parameter")
      ->required();
  large->add_option("--chi", family_chi,
                    "Euler characteristic of the glued surface")
      ->required();
  large->add_option("--g", family_g, "base genus of the glued piece");
  large->add_option("--k", family_k, "exceptional fibers of the glued piece");

  CLI11_PARSE(app, argc, argv);

  char* message = nullptr;
  gm_report* report = nullptr;
  gm_status status = GM_OK;

  if (genus->parsed() || modify->parsed() || bound->parsed() ||
      check->parsed()) {
    gm_manifold* manifold = nullptr;
    int code = load_manifold(manifest_path, &manifold);
    if (code != kExitOk) return code;
    if (genus->parsed()) {
      status = gm_report_genus(manifold, oracle, &report, &message);
    } else if (modify->parsed()) {
      status = gm_report_modify(manifold, oracle, &report, &message);
    } else if (bound->parsed()) {
      status = gm_report_bound(manifold, oracle, &report, &message);
    } else {
      status = gm_report_check(manifold, routed ? 1 : 0, no_teleport ? 0 : 1,
                               oracle, &report, &message);
    }
    gm_manifold_free(manifold);
    if (status != GM_OK) return fail(status, message);
    return emit(report, json_mode);
  }

  if (small->parsed()) {
    if (!json_mode) {
      gm_manifold* manifold = nullptr;
      status = gm_manifold_small_genus_family(family_m, &manifold, &message);
      if (status != GM_OK) return fail(status, message);
      char* manifest = gm_manifold_to_json(manifold);
      std::cout << manifest;
      gm_string_free(manifest);
      gm_manifold_free(manifold);
    }
    status = gm_report_small_genus_family(family_m, oracle, &report, &message);
    if (status != GM_OK) return fail(status, message);
    return emit(report, json_mode);
  }

  if (large->parsed()) {
    if (!json_mode) {
      gm_manifold* manifold = nullptr;
      status = gm_manifold_large_genus_family(
          family_p, family_q, family_chi, family_g, family_k, &manifold,
          &message);
      if (status != GM_OK) return fail(status, message);
      char* manifest = gm_manifold_to_json(manifold);
      std::cout << manifest;
      gm_string_free(manifest);
      gm_manifold_free(manifold);
    }
    status = gm_report_large_genus_family(family_p, family_q, family_chi,
                                          family_g, family_k, oracle, &report,
                                          &message);
    if (status != GM_OK) return fail(status, message);
    return emit(report, json_mode);
  }

  return kExitError;
}
