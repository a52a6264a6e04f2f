#include "core/report.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/genus.hpp"
#include "core/graph.hpp"

namespace graphmfd {

namespace {

using nlohmann::json;

std::string hex64(unsigned long long value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

json sides_json(const std::vector<Side>& sides) {
  json out = json::array();
  for (Side s : sides) out.push_back(s == Side::m1 ? 1 : 2);
  return out;
}

std::string sides_text(const std::vector<Side>& sides) {
  std::string out;
  for (Side s : sides) {
    if (!out.empty()) out += ' ';
    out += s == Side::m1 ? '1' : '2';
  }
  return out;
}

json int_list(const std::vector<int>& values) {
  return json(values);
}

std::string list_text(const std::vector<int>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

json assignment_json(const AmalgamationGenusResult& r) {
  json pieces = json::array();
  for (size_t v = 0; v < r.per_piece.size(); ++v) {
    const PieceGenus& pg = r.per_piece[v];
    pieces.push_back({{"vertex", v},
                      {"g_h", pg.g_h},
                      {"a", pg.a},
                      {"branch", pg.branch == GenusBranch::standard
                                     ? "standard"
                                     : "one-sided"},
                      {"weighted", pg.weighted}});
  }
  return {{"sides", sides_json(r.partition_used.side)},
          {"value", r.value},
          {"general_value", r.general_value},
          {"pieces", std::move(pieces)}};
}

// Size-then-lexicographic exhaustive search for the smallest doubling set,
// used by the --oracle path. Deliberately goes through subset enumeration
// and the odd-cycle test rather than the coloring search.
std::pair<int, std::vector<int>> exhaustive_min_doubling(
    const GraphManifold& manifold) {
  const int m = manifold.edge_count();
  if (m > 16) {
    throw Error(ErrorCode::unsupported,
                "exhaustive doubling oracle limited to 16 edges");
  }
  std::vector<int> subset;
  std::function<bool(int, int)> extend = [&](int start, int remaining) {
    if (remaining == 0) {
      DerivedGraph derived = derive_graph(manifold, subset);
      return !find_odd_cycle(to_multigraph(derived)).found;
    }
    for (int e = start; e <= m - remaining; ++e) {
      subset.push_back(e);
      if (extend(e + 1, remaining - 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= m; ++size) {
    subset.clear();
    if (extend(0, size)) return {size, subset};
  }
  throw Error(ErrorCode::internal, "doubling every edge must separate");
}

struct TextBuilder {
  std::ostringstream out;

  void line(const std::string& text) { out << text << '\n'; }
};

Report base_report(std::string command, const GraphManifold& manifold,
                   const std::optional<SplittingProfile>& profile) {
  Report report;
  report.command = std::move(command);
  report.digest = "fnv1a64:" +
                  digest_fnv1a64(serialize_manifest(manifold, profile));
  return report;
}

void oracle_failure(Report& report, const std::string& message) {
  report.oracle_ok = false;
  report.warnings.push_back({"oracle-mismatch", message});
}

void finish_text(Report& report, TextBuilder& text) {
  for (const ReportWarning& w : report.warnings) {
    text.line("warning [" + w.code + "]: " + w.message);
  }
  if (report.oracle_ok.has_value()) {
    text.line(std::string("oracle: ") + (*report.oracle_ok ? "ok" : "MISMATCH"));
  }
  report.text = text.out.str();
}

}  // namespace

std::string digest_fnv1a64(std::string_view data) {
  unsigned long long hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hex64(hash);
}

json Report::to_json() const {
  json warning_list = json::array();
  for (const ReportWarning& w : warnings) {
    warning_list.push_back({{"code", w.code}, {"message", w.message}});
  }
  json document = {{"schema", "report/1"},
                   {"command", command},
                   {"input_digest", digest},
                   {"results", results},
                   {"warnings", std::move(warning_list)}};
  if (feasible.has_value()) document["feasible"] = *feasible;
  if (oracle_ok.has_value()) document["oracle_ok"] = *oracle_ok;
  return document;
}

Report report_genus(const ParsedManifest& parsed, bool oracle) {
  const GraphManifold& manifold = parsed.manifold;
  Report report = base_report("genus", manifold, parsed.profile);
  Modification mod = amalgamatable_modification(manifold);
  IdealPartitionResult ideal = ideal_partition(manifold, mod);
  const AmalgamationGenusResult& chosen = ideal.result;
  const AmalgamationGenusResult& other = ideal.other;
  bool chosen_first = chosen.partition_used.side[0] == Side::m1;
  const AmalgamationGenusResult& first = chosen_first ? chosen : other;
  const AmalgamationGenusResult& second = chosen_first ? other : chosen;

  report.results = {{"q", mod.q()},
                    {"ell", chosen.ell},
                    {"doubled_edges", int_list(mod.doubled_edges)},
                    {"assignments",
                     json::array({assignment_json(first),
                                  assignment_json(second)})},
                    {"ideal", {{"index", chosen_first ? 0 : 1},
                               {"value", chosen.value}}}};

  TextBuilder text;
  text.line("command: genus");
  text.line("input: fnv1a64:" + report.digest.substr(8));
  text.line("modification: q = " + std::to_string(mod.q()) +
            ", doubled edges = " + list_text(mod.doubled_edges));
  text.line("assignment A (sides " + sides_text(first.partition_used.side) +
            "): genus " + std::to_string(first.value));
  text.line("assignment B (sides " + sides_text(second.partition_used.side) +
            "): genus " + std::to_string(second.value));
  text.line("ideal assignment: " + std::string(chosen_first ? "A" : "B") +
            ", amalgamation genus " + std::to_string(chosen.value));

  if (oracle) {
    report.oracle_ok = true;
    auto [oracle_q, oracle_set] = exhaustive_min_doubling(manifold);
    if (oracle_q != mod.q() || oracle_set != mod.doubled_edges) {
      oracle_failure(report, "exhaustive doubling oracle found q = " +
                                 std::to_string(oracle_q) + ", set " +
                                 list_text(oracle_set));
    }
    for (const AmalgamationGenusResult* r : {&first, &second}) {
      std::vector<int> genera, torus_genera;
      for (const PieceGenus& pg : r->per_piece) genera.push_back(pg.g_h);
      torus_genera.assign(manifold.edge_count() + mod.q(), 1);
      int general = amalgamation_genus_general(genera, torus_genera, r->ell);
      if (general != r->value) {
        oracle_failure(report,
                       "formula routes disagree: " + std::to_string(general) +
                           " vs " + std::to_string(r->value));
      }
    }
  }
  finish_text(report, text);
  return report;
}

Report report_modify(const ParsedManifest& parsed, bool oracle) {
  const GraphManifold& manifold = parsed.manifold;
  Report report = base_report("modify", manifold, parsed.profile);
  Modification mod = amalgamatable_modification(manifold);
  DerivedGraph derived = derive_graph(manifold, mod.doubled_edges);
  int greedy = greedy_modification_size(manifold);
  int ell = cycle_rank(to_multigraph(manifold)).ell;

  json derived_edges = json::array();
  for (const DerivedGraph::DEdge& e : derived.edges) {
    derived_edges.push_back({e.u, e.v});
  }
  report.results = {{"q", mod.q()},
                    {"doubled_edges", int_list(mod.doubled_edges)},
                    {"bipartition", sides_json(mod.bipartition)},
                    {"greedy_q", greedy},
                    {"ell", ell},
                    {"derived",
                     {{"vertices", derived.vertex_count()},
                      {"edges", std::move(derived_edges)}}}};

  TextBuilder text;
  text.line("command: modify");
  text.line("input: fnv1a64:" + report.digest.substr(8));
  text.line("cycle rank: " + std::to_string(ell));
  text.line("q: " + std::to_string(mod.q()));
  text.line("doubled edges: " + list_text(mod.doubled_edges));
  text.line("bipartition: " + sides_text(mod.bipartition));
  text.line("greedy doubling count: " + std::to_string(greedy));

  if (oracle) {
    report.oracle_ok = true;
    auto [oracle_q, oracle_set] = exhaustive_min_doubling(manifold);
    if (oracle_q != mod.q() || oracle_set != mod.doubled_edges) {
      oracle_failure(report, "exhaustive doubling oracle found q = " +
                                 std::to_string(oracle_q) + ", set " +
                                 list_text(oracle_set));
    }
    if (greedy < mod.q()) {
      oracle_failure(report, "greedy doubling beat the reported minimum");
    }
  }
  finish_text(report, text);
  return report;
}

namespace {

const SplittingProfile& require_profile(const ParsedManifest& parsed) {
  if (!parsed.profile) {
    throw Error(ErrorCode::invalid, "manifest has no profile block");
  }
  return *parsed.profile;
}

}  // namespace

Report report_bound(const ParsedManifest& parsed, bool oracle) {
  const GraphManifold& manifold = parsed.manifold;
  const SplittingProfile& profile = require_profile(parsed);
  Report report = base_report("bound", manifold, parsed.profile);
  Modification mod = amalgamatable_modification(manifold);
  BoundReport bound = stabilization_bound(manifold, profile, mod);

  report.results = {{"splitting_genus", bound.genus},
                    {"amalgamation_genus", bound.amalgamation_genus},
                    {"stabilizations", bound.stabilizations},
                    {"census_applies", bound.census_applies},
                    {"census_stabilizations", bound.census_stabilizations}};

  TextBuilder text;
  text.line("command: bound");
  text.line("input: fnv1a64:" + report.digest.substr(8));
  text.line("splitting genus: " + std::to_string(bound.genus));
  text.line("amalgamation genus: " + std::to_string(bound.amalgamation_genus));
  text.line("stabilization bound: " + std::to_string(bound.stabilizations) +
            (bound.stabilizations == 1 ? " stabilization" : " stabilizations"));
  if (bound.census_applies) {
    CensusReport census = no_horizontal_census(manifold, profile);
    report.results["census"] = {{"configuration", census.configuration},
                                {"range", {census.range_lo, census.range_hi}},
                                {"exact", census.exact},
                                {"low_genus_criterion",
                                 census.low_genus_criterion},
                                {"note", census.note}};
    text.line("no-horizontal census: configuration " +
              std::to_string(census.configuration) + ", amalgamation genus " +
              std::to_string(census.exact) + " within [" +
              std::to_string(census.range_lo) + ", " +
              std::to_string(census.range_hi) + "]");
    text.line("census construction reaches an amalgamation with " +
              std::to_string(bound.census_stabilizations) +
              (bound.census_stabilizations == 1 ? " stabilization"
                                                : " stabilizations") +
              "; the general bound above is not adjusted");
  }

  if (oracle) {
    report.oracle_ok = true;
    // Counting identity: total tubes minus the active contribution equal
    // g + (n - 1).
    long long tubes = 0;
    long long n = 0;
    for (const VertexSurface& s : profile.vertex) {
      if (s.cls == SurfaceClass::horizontal) {
        tubes += static_cast<long long>(s.copies) *
                 tube_count_per_component(s.genus, s.boundary);
        n += s.copies;
      }
      if (s.cls == SurfaceClass::pseudohorizontal) {
        tubes += tube_count_per_component(s.genus, s.boundary);
      }
    }
    if (profile.active_edge) tubes += 1;
    if (tubes != static_cast<long long>(bound.genus) + (n - 1)) {
      oracle_failure(report, "tube counting identity failed");
    }
    int expected = bound.genus >= bound.amalgamation_genus
                       ? 1
                       : bound.amalgamation_genus - bound.genus + 1;
    if (expected != bound.stabilizations) {
      oracle_failure(report, "stabilization rule mismatch");
    }
  }
  finish_text(report, text);
  return report;
}

Report report_check(const ParsedManifest& parsed, BudgetMode mode,
                    bool teleport, bool oracle) {
  const GraphManifold& manifold = parsed.manifold;
  const SplittingProfile& profile = require_profile(parsed);
  Report report = base_report("check", manifold, parsed.profile);
  Modification mod = amalgamatable_modification(manifold);
  IdealPartitionResult ideal = ideal_partition(manifold, mod);
  TubeBudget budget =
      tube_budget(manifold, profile, mod, ideal.assignment, mode, teleport);

  json demands = json::array();
  json retained = json::array();
  json extra = json::array();
  for (size_t v = 0; v < budget.demands.size(); ++v) {
    demands.push_back(budget.demands[v]);
    retained.push_back(budget.retained[v]);
    extra.push_back(static_cast<bool>(budget.extra_tube[v]));
  }
  report.results = {
      {"mode", mode == BudgetMode::aggregate ? "aggregate" : "routed"},
      {"teleport", teleport},
      {"supply", budget.supply},
      {"ideal_components", budget.ideal_components},
      {"demands", std::move(demands)},
      {"retained", std::move(retained)},
      {"extra_tube", std::move(extra)},
      {"slack", budget.slack},
      {"feasible", budget.feasible},
      {"amalgamation_genus", ideal.result.value}};
  report.feasible = budget.feasible;

  TextBuilder text;
  text.line("command: check");
  text.line("input: fnv1a64:" + report.digest.substr(8));
  text.line(std::string("mode: ") +
            (mode == BudgetMode::aggregate ? "aggregate" : "routed") +
            (mode == BudgetMode::routed && !teleport ? ", no teleport" : ""));
  text.line("supply: " + std::to_string(budget.supply));
  long long demand_total = std::accumulate(budget.demands.begin(),
                                           budget.demands.end(), 0LL);
  long long retained_total = std::accumulate(budget.retained.begin(),
                                             budget.retained.end(), 0LL);
  text.line("demands: " + std::to_string(demand_total) +
            ", retained: " + std::to_string(retained_total));
  text.line("slack: " + std::to_string(budget.slack));
  text.line(std::string("feasible: ") + (budget.feasible ? "yes" : "no"));

  if (oracle) {
    report.oracle_ok = true;
    long long slack = budget.supply - demand_total - retained_total;
    if (slack != budget.slack) {
      oracle_failure(report, "slack recomputation failed");
    }
    if (mode == BudgetMode::routed && budget.feasible && budget.slack < 0) {
      oracle_failure(report, "routed feasibility without aggregate slack");
    }
    int genus = splitting_genus(manifold, profile);
    if (genus >= ideal.result.value && budget.slack < 0) {
      oracle_failure(report, "counting bound violated for genus >= a");
    }
  }
  finish_text(report, text);
  return report;
}

namespace {

Report family_report(const FamilyInstance& instance, const std::string& name,
                     json parameters, bool oracle) {
  ParsedManifest parsed{instance.manifold, instance.profile};
  Report report = base_report("examples " + name, instance.manifold,
                              parsed.profile);
  Modification mod = amalgamatable_modification(instance.manifold);
  IdealPartitionResult ideal = ideal_partition(instance.manifold, mod);
  int genus = splitting_genus(instance.manifold, instance.profile);
  BoundReport bound =
      stabilization_bound(instance.manifold, instance.profile, mod);

  std::string manifest_text =
      serialize_manifest(instance.manifold, instance.profile);
  report.results = {{"family", instance.family},
                    {"parameters", std::move(parameters)},
                    {"manifest", json::parse(manifest_text)},
                    {"splitting_genus", genus},
                    {"amalgamation_genus", ideal.result.value},
                    {"closed_form_genus", instance.closed_form_genus},
                    {"stabilizations", bound.stabilizations}};
  if (ideal.result.value != instance.closed_form_genus) {
    report.warnings.push_back(
        {"closed-form-mismatch",
         "computed amalgamation genus " + std::to_string(ideal.result.value) +
             " differs from the classical closed-form value " +
             std::to_string(instance.closed_form_genus) +
             " for this family"});
  }

  TextBuilder text;
  text.line("command: examples " + name);
  text.line("input: fnv1a64:" + report.digest.substr(8));
  text.line("splitting genus: " + std::to_string(genus));
  text.line("amalgamation genus: " + std::to_string(ideal.result.value));
  text.line("closed-form value: " +
            std::to_string(instance.closed_form_genus));
  text.line("stabilization bound: " + std::to_string(bound.stabilizations) +
            (bound.stabilizations == 1 ? " stabilization" : " stabilizations"));
  text.line(genus > ideal.result.value
                ? "the splitting genus exceeds the amalgamation genus"
                : (genus < ideal.result.value
                       ? "the splitting genus is below the amalgamation genus"
                       : "the splitting genus equals the amalgamation genus"));

  if (oracle) {
    report.oracle_ok = true;
    ParsedManifest reparsed = parse_manifest(manifest_text);
    if (!(reparsed.manifold == instance.manifold)) {
      oracle_failure(report, "generator output did not round-trip");
    }
  }
  finish_text(report, text);
  return report;
}

}  // namespace

Report report_small_family(int m, bool oracle) {
  FamilyInstance instance = small_genus_family(m);
  return family_report(instance, "small-genus", {{"m", m}}, oracle);
}

Report report_large_family(int p, int q, int chi_f, int base_genus,
                           int fiber_count, bool oracle) {
  FamilyInstance instance =
      large_genus_family(p, q, chi_f, base_genus, fiber_count);
  return family_report(instance, "large-genus",
                       {{"p", p},
                        {"q", q},
                        {"chi_f", chi_f},
                        {"base_genus", base_genus},
                        {"fiber_count", fiber_count}},
                       oracle);
}

}  // namespace graphmfd
