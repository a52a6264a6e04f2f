#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "core/manifest.hpp"
#include "core/splitting.hpp"

namespace graphmfd {

struct ReportWarning {
  std::string code;
  std::string message;
};

// One rendered command result. Text and JSON renderings are
// byte-deterministic for identical inputs and flags; the JSON form follows
// the "report/1" schema shipped under docs/.
struct Report {
  std::string command;
  std::string digest;
  nlohmann::json results;
  std::vector<ReportWarning> warnings;
  std::string text;
  std::optional<bool> feasible;   // set by the budget check
  std::optional<bool> oracle_ok;  // set when cross-checks were requested

  nlohmann::json to_json() const;
};

std::string digest_fnv1a64(std::string_view data);

Report report_genus(const ParsedManifest& parsed, bool oracle);
Report report_modify(const ParsedManifest& parsed, bool oracle);
Report report_bound(const ParsedManifest& parsed, bool oracle);
Report report_check(const ParsedManifest& parsed, BudgetMode mode,
                    bool teleport, bool oracle);
Report report_small_family(int m, bool oracle);
Report report_large_family(int p, int q, int chi_f, int base_genus,
                           int fiber_count, bool oracle);

}  // namespace graphmfd
