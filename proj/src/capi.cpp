#include "graphmfd/graphmfd.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/manifest.hpp"
#include "core/report.hpp"

struct gm_manifold {
  graphmfd::ParsedManifest parsed;
};

struct gm_report {
  graphmfd::Report report;
  std::string json_text;
};

namespace {

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

gm_status status_of(const graphmfd::Error& error) {
  switch (error.code()) {
    case graphmfd::ErrorCode::parse:
      return GM_ERROR_PARSE;
    case graphmfd::ErrorCode::invalid:
      return GM_ERROR_INVALID;
    case graphmfd::ErrorCode::unsupported:
      return GM_ERROR_UNSUPPORTED;
    case graphmfd::ErrorCode::internal:
      return GM_ERROR_INTERNAL;
  }
  return GM_ERROR_INTERNAL;
}

template <typename Fn>
gm_status guarded(char** error_message, Fn&& fn) {
  if (error_message) *error_message = nullptr;
  try {
    fn();
    return GM_OK;
  } catch (const graphmfd::Error& error) {
    if (error_message) *error_message = duplicate(error.what());
    return status_of(error);
  } catch (const std::exception& error) {
    if (error_message) *error_message = duplicate(error.what());
    return GM_ERROR_INTERNAL;
  }
}

gm_report* wrap(graphmfd::Report report) {
  auto* out = new gm_report{std::move(report), {}};
  out->json_text = out->report.to_json().dump(2) + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* gm_version(void) { return "1.0.0"; }

gm_status gm_manifold_parse(const char* text, size_t length,
                            gm_manifold** out, char** error_message) {
  if (!text || !out) {
    if (error_message) *error_message = duplicate("null argument");
    return GM_ERROR_INVALID;
  }
  *out = nullptr;
  return guarded(error_message, [&] {
    auto parsed = graphmfd::parse_manifest(std::string_view(text, length));
    *out = new gm_manifold{std::move(parsed)};
  });
}

gm_status gm_manifold_small_genus_family(long m, gm_manifold** out,
                                         char** error_message) {
  if (!out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    auto instance = graphmfd::small_genus_family(static_cast<int>(m));
    *out = new gm_manifold{
        {std::move(instance.manifold), std::move(instance.profile)}};
  });
}

gm_status gm_manifold_large_genus_family(long p, long q, long chi_f,
                                         long base_genus, long fiber_count,
                                         gm_manifold** out,
                                         char** error_message) {
  if (!out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    auto instance = graphmfd::large_genus_family(
        static_cast<int>(p), static_cast<int>(q), static_cast<int>(chi_f),
        static_cast<int>(base_genus), static_cast<int>(fiber_count));
    *out = new gm_manifold{
        {std::move(instance.manifold), std::move(instance.profile)}};
  });
}

long gm_manifold_vertex_count(const gm_manifold* manifold) {
  return manifold ? manifold->parsed.manifold.vertex_count() : 0;
}

long gm_manifold_edge_count(const gm_manifold* manifold) {
  return manifold ? manifold->parsed.manifold.edge_count() : 0;
}

int gm_manifold_has_profile(const gm_manifold* manifold) {
  return manifold && manifold->parsed.profile ? 1 : 0;
}

char* gm_manifold_to_json(const gm_manifold* manifold) {
  if (!manifold) return nullptr;
  return duplicate(graphmfd::serialize_manifest(manifold->parsed.manifold,
                                                manifold->parsed.profile));
}

void gm_manifold_free(gm_manifold* manifold) { delete manifold; }

gm_status gm_report_genus(const gm_manifold* manifold, int with_oracle,
                          gm_report** out, char** error_message) {
  if (!manifold || !out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    *out = wrap(graphmfd::report_genus(manifold->parsed, with_oracle != 0));
  });
}

gm_status gm_report_modify(const gm_manifold* manifold, int with_oracle,
                           gm_report** out, char** error_message) {
  if (!manifold || !out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    *out = wrap(graphmfd::report_modify(manifold->parsed, with_oracle != 0));
  });
}

gm_status gm_report_bound(const gm_manifold* manifold, int with_oracle,
                          gm_report** out, char** error_message) {
  if (!manifold || !out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    *out = wrap(graphmfd::report_bound(manifold->parsed, with_oracle != 0));
  });
}

gm_status gm_report_check(const gm_manifold* manifold, int routed,
                          int teleport, int with_oracle, gm_report** out,
                          char** error_message) {
  if (!manifold || !out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    *out = wrap(graphmfd::report_check(
        manifold->parsed,
        routed ? graphmfd::BudgetMode::routed : graphmfd::BudgetMode::aggregate,
        teleport != 0, with_oracle != 0));
  });
}

gm_status gm_report_small_genus_family(long m, int with_oracle,
                                       gm_report** out, char** error_message) {
  if (!out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    *out = wrap(
        graphmfd::report_small_family(static_cast<int>(m), with_oracle != 0));
  });
}

gm_status gm_report_large_genus_family(long p, long q, long chi_f,
                                       long base_genus, long fiber_count,
                                       int with_oracle, gm_report** out,
                                       char** error_message) {
  if (!out) return GM_ERROR_INVALID;
  *out = nullptr;
  return guarded(error_message, [&] {
    *out = wrap(graphmfd::report_large_family(
        static_cast<int>(p), static_cast<int>(q), static_cast<int>(chi_f),
        static_cast<int>(base_genus), static_cast<int>(fiber_count),
        with_oracle != 0));
  });
}

const char* gm_report_text(const gm_report* report) {
  return report ? report->report.text.c_str() : nullptr;
}

const char* gm_report_json(const gm_report* report) {
  return report ? report->json_text.c_str() : nullptr;
}

size_t gm_report_warning_count(const gm_report* report) {
  return report ? report->report.warnings.size() : 0;
}

const char* gm_report_warning_code(const gm_report* report, size_t index) {
  if (!report || index >= report->report.warnings.size()) return nullptr;
  return report->report.warnings[index].code.c_str();
}

int gm_report_feasible(const gm_report* report) {
  if (!report || !report->report.feasible.has_value()) return -1;
  return *report->report.feasible ? 1 : 0;
}

int gm_report_oracle_ok(const gm_report* report) {
  if (!report || !report->report.oracle_ok.has_value()) return -1;
  return *report->report.oracle_ok ? 1 : 0;
}

void gm_report_free(gm_report* report) { delete report; }

void gm_string_free(char* text) { std::free(text); }

}  // extern "C"
