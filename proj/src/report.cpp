/*
 * Copyright 2026 The ESS Engine Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ess/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ess/numeric.hpp"

namespace ess {
namespace {

using nlohmann::json;

enum class Align { kLeft, kRight };

std::size_t DisplayWidth(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

// Plain aligned text table: two-space gutters, dashed rule under the header.
class TextTable {
 public:
  TextTable(std::vector<std::string> headers, std::vector<Align> align)
      : headers_(std::move(headers)), align_(std::move(align)) {}

  void AddRow(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string Render() const {
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = DisplayWidth(headers_[c]);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], DisplayWidth(row[c]));
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string pad(width[c] - DisplayWidth(row[c]), ' ');
        if (c > 0) line += "  ";
        line += align_[c] == Align::kRight ? pad + row[c] : row[c] + pad;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    };
    emit(headers_);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
    for (const auto& row : rows_) emit(row);
    return out;
  }

 private:
  std::vector<std::string> headers_;
  std::vector<Align> align_;
  std::vector<std::vector<std::string>> rows_;
};

std::string CsvQuote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// A CSV cell: strings are always quoted, numbers never.
struct Cell {
  std::string text;
  bool quoted;
};

Cell Str(std::string_view s) { return {std::string(s), true}; }
Cell Num(std::string s) { return {std::move(s), false}; }

std::string CsvLine(const std::vector<Cell>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i].quoted ? CsvQuote(cells[i].text) : cells[i].text;
  }
  return line + "\n";
}

std::string CsvHeader(std::initializer_list<std::string_view> names) {
  std::vector<Cell> cells;
  for (auto n : names) cells.push_back(Str(n));
  return CsvLine(cells);
}

std::string NameOf(const Catalog& catalog, std::string_view id) {
  const Technique* t = FindTechnique(catalog, id);
  return t ? t->name : std::string(id);
}

std::string FormatRating(double v) {
  return v == std::floor(v) ? FormatFixed(v, 0) : FormatFixed(v, 2);
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

json TripleJson(const AxisTriple& t) { return {{"c", t.c}, {"u", t.u}, {"d", t.d}}; }

AxisTriple TripleFromJson(const json& j) {
  return {j.at("c").get<double>(), j.at("u").get<double>(), j.at("d").get<double>()};
}

Level LevelFromName(const std::string& name) {
  for (auto l : {Level::kLow, Level::kMedium, Level::kHigh}) {
    if (LevelName(l) == name) return l;
  }
  throw ParseError("unknown qualitative level \"" + name + "\"");
}

Feasibility FeasibilityFromWord(const std::string& word) {
  for (auto f : {Feasibility::kFits, Feasibility::kMarginal, Feasibility::kInfeasibleOnline}) {
    if (FeasibilityWord(f) == word) return f;
  }
  throw ParseError("unknown feasibility \"" + word + "\"");
}

// How a tier's evidence value is printed.
std::string EvidenceDisplay(const TierPick& p) {
  return FormatFixed(p.evidence_value, p.evidence_key == "efficiency_ratio" ? 1 : 2);
}

std::string EvidenceLabel(std::string_view key) {
  if (key == "efficiency_ratio") return "ratio";
  if (key == "u_prime") return "U'";
  if (key == "c_prime") return "C'";
  return std::string(key);
}

json PickToJson(const std::optional<TierPick>& p) {
  if (!p) return nullptr;
  return {{"technique_id", p->technique_id},
          {"evidence_key", p->evidence_key},
          {"evidence_value", p->evidence_value},
          {"utility", p->utility},
          {"feasibility", FeasibilityWord(p->feasibility)},
          {"display", EvidenceDisplay(*p)}};
}

std::optional<TierPick> PickFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  return TierPick{j.at("technique_id").get<std::string>(), j.at("evidence_key").get<std::string>(),
                  j.at("evidence_value").get<double>(), j.at("utility").get<double>(),
                  FeasibilityFromWord(j.at("feasibility").get<std::string>())};
}

struct TierSection {
  Tier tier;
  const char* key;
  const char* title;
};

constexpr TierSection kTierSections[] = {
    {Tier::kAlwaysOn, "tier1_always_on", "Tier 1 - Always-on (real-time pipeline)"},
    {Tier::kSelective, "tier2_selective", "Tier 2 - Selective (dispute and analyst review)"},
    {Tier::kPeriodic, "tier3_periodic", "Tier 3 - Periodic (offline compliance and governance)"},
};

std::vector<std::string> WarningsFor(const TierPlan& plan, Tier tier) {
  const std::string prefix = "tier " + std::to_string(static_cast<int>(tier)) + " ";
  std::vector<std::string> out;
  for (const auto& w : plan.warnings) {
    if (w.rfind(prefix, 0) == 0) out.push_back(w);
  }
  return out;
}

std::string JoinIds(const std::vector<std::string>& ids, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += sep;
    out += ids[i];
  }
  return out;
}

std::string PlanTierId(const std::optional<TierPlan>& plan, Tier tier) {
  if (!plan || !plan->At(tier)) return "-";
  return plan->At(tier)->technique_id;
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "machine") return OutputFormat::kMachine;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON conversions

json CatalogToJson(const Catalog& catalog) {
  json list = json::array();
  for (const auto& t : catalog) {
    json props = json::object();
    for (std::size_t k = 0; k < kPropertyNames.size(); ++k) {
      props[std::string(kPropertyNames[k])] = PropertyAt(t.properties, k);
    }
    json latency = {{"mode", t.latency.mode == LatencyMode::kOnline ? "online" : "offline_only"}};
    if (t.latency.estimate_ms) latency["estimate_ms"] = *t.latency.estimate_ms;
    json entry = {{"id", t.id},
                  {"name", t.name},
                  {"family", t.family},
                  {"modalities", t.modalities},
                  {"properties", props},
                  {"latency", latency}};
    if (t.notes) entry["notes"] = *t.notes;
    list.push_back(std::move(entry));
  }
  return {{"techniques", list}};
}

json ScenarioToJson(const ScenarioContext& s) {
  json j = {{"name", s.name},
            {"gamma_c", s.gamma_c},
            {"gamma_u", s.gamma_u},
            {"gamma_d", s.gamma_d},
            {"latency_budget_ms", s.latency_budget_ms},
            {"reserved_overhead_ms", s.reserved_overhead_ms},
            {"fit_fraction", s.fit_fraction},
            {"selection_weights",
             {{"c", s.selection_weights.c}, {"u", s.selection_weights.u}, {"d", s.selection_weights.d}}}};
  if (s.axis_weights) {
    const AxisWeights& w = *s.axis_weights;
    j["axis_weights"] = {{"compliance", {{"audit", w.audit}, {"trace", w.trace}}},
                         {"user", {{"compr", w.compr}, {"action", w.action}}},
                         {"developer", {{"fidelity", w.fidelity}, {"debug", w.debug}, {"eff", w.eff}}}};
  }
  return j;
}

json ScoresToJson(std::span<const EssCoordinates> scores) {
  json list = json::array();
  for (const auto& s : scores) {
    list.push_back({{"technique_id", s.technique_id},
                    {"raw", TripleJson(s.raw)},
                    {"adjusted", TripleJson(s.adjusted)},
                    {"levels",
                     {{"c", LevelName(s.levels[0])}, {"u", LevelName(s.levels[1])}, {"d", LevelName(s.levels[2])}}},
                    {"display",
                     {{"c_prime", FormatFixed(s.adjusted.c, 2)},
                      {"u_prime", FormatFixed(s.adjusted.u, 2)},
                      {"d_prime", FormatFixed(s.adjusted.d, 2)}}}});
  }
  return list;
}

std::vector<EssCoordinates> ScoresFromJson(const json& j) {
  std::vector<EssCoordinates> out;
  try {
    for (const auto& e : j) {
      EssCoordinates s;
      s.technique_id = e.at("technique_id").get<std::string>();
      s.raw = TripleFromJson(e.at("raw"));
      s.adjusted = TripleFromJson(e.at("adjusted"));
      const json& lv = e.at("levels");
      s.levels = {LevelFromName(lv.at("c").get<std::string>()), LevelFromName(lv.at("u").get<std::string>()),
                  LevelFromName(lv.at("d").get<std::string>())};
      out.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scores document: ") + e.what());
  }
  return out;
}

json SelectionToJson(std::span<const SelectionResult> results, RatioMode mode) {
  json list = json::array();
  for (const auto& r : results) {
    list.push_back({{"technique_id", r.technique_id},
                    {"adjusted", TripleJson(r.adjusted)},
                    {"efficiency_rating", r.efficiency_rating},
                    {"utility", r.utility},
                    {"resource_cost", r.resource_cost},
                    {"efficiency_ratio", r.efficiency_ratio},
                    {"feasibility", FeasibilityWord(r.feasibility)},
                    {"on_pareto_frontier", r.on_pareto_frontier},
                    {"display",
                     {{"utility", FormatFixed(r.utility, 2)},
                      {"resource_cost", FormatFixed(r.resource_cost, 2)},
                      {"efficiency_ratio", FormatFixed(r.efficiency_ratio, 1)}}}});
  }
  return {{"ratio_mode", RatioModeName(mode)}, {"results", list}};
}

std::vector<SelectionResult> SelectionFromJson(const json& j) {
  std::vector<SelectionResult> out;
  try {
    for (const auto& e : j.at("results")) {
      SelectionResult r;
      r.technique_id = e.at("technique_id").get<std::string>();
      r.adjusted = TripleFromJson(e.at("adjusted"));
      r.efficiency_rating = e.at("efficiency_rating").get<double>();
      r.utility = e.at("utility").get<double>();
      r.resource_cost = e.at("resource_cost").get<double>();
      r.efficiency_ratio = e.at("efficiency_ratio").get<double>();
      r.feasibility = FeasibilityFromWord(e.at("feasibility").get<std::string>());
      r.on_pareto_frontier = e.at("on_pareto_frontier").get<bool>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed selection document: ") + e.what());
  }
  return out;
}

json PlanToJson(const TierPlan& plan) {
  return {{"tier1_always_on", PickToJson(plan.tier1_always_on)},
          {"tier2_selective", PickToJson(plan.tier2_selective)},
          {"tier3_periodic", PickToJson(plan.tier3_periodic)},
          {"warnings", plan.warnings}};
}

TierPlan PlanFromJson(const json& j) {
  try {
    TierPlan plan;
    plan.tier1_always_on = PickFromJson(j.at("tier1_always_on"));
    plan.tier2_selective = PickFromJson(j.at("tier2_selective"));
    plan.tier3_periodic = PickFromJson(j.at("tier3_periodic"));
    plan.warnings = j.at("warnings").get<std::vector<std::string>>();
    return plan;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed plan document: ") + e.what());
  }
}

json ProvenanceToJson(const ProvenanceTrail& trail) {
  json records = json::array();
  for (const auto& r : trail.records) {
    records.push_back({{"stage", r.stage},
                       {"inputs_digest", r.inputs_digest},
                       {"parameters", r.parameters},
                       {"outputs", r.outputs}});
  }
  json j = {{"records", records}};
  if (!trail.generated_at.empty()) j["generated_at"] = trail.generated_at;
  return j;
}

ProvenanceTrail ProvenanceFromJson(const json& j) {
  try {
    ProvenanceTrail trail;
    for (const auto& r : j.at("records")) {
      trail.records.push_back({r.at("stage").get<std::string>(), r.at("inputs_digest").get<std::string>(),
                               r.at("parameters"), r.at("outputs")});
    }
    if (auto it = j.find("generated_at"); it != j.end()) trail.generated_at = it->get<std::string>();
    return trail;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed provenance document: ") + e.what());
  }
}

json SweepToJson(const SweepReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    json jp = {{"value", p.value}, {"valid", p.valid}};
    if (p.valid) {
      jp["ranking_by_ratio"] = p.ranking_by_ratio;
      jp["ranking_by_utility"] = p.ranking_by_utility;
      jp["plan"] = p.plan ? PlanToJson(*p.plan) : json(nullptr);
    } else {
      jp["error"] = p.error;
    }
    points.push_back(std::move(jp));
  }
  json stability = json::array();
  for (const auto& s : report.stability) stability.push_back(s ? json(*s) : json(nullptr));
  return {{"parameter", SweepParameterName(report.parameter)},
          {"ratio_mode", RatioModeName(report.ratio_mode)},
          {"stability_metric", "kendall_tau_b"},
          {"points", points},
          {"stability", stability},
          {"change_points", report.change_points}};
}

json EvaluationToJson(const Evaluation& ev) {
  return {{"catalog", CatalogToJson(ev.catalog)},
          {"scenario", ScenarioToJson(ev.scenario)},
          {"scores", ScoresToJson(ev.scores)},
          {"selection", SelectionToJson(ev.selection, ev.ratio_mode)},
          {"plan", PlanToJson(ev.plan)},
          {"provenance", ProvenanceToJson(ev.provenance)},
          {"engine_version", kEngineVersion}};
}

std::string RenderMachineDocument(const Evaluation& ev) { return Dump(EvaluationToJson(ev)); }

std::string RenderCatalog(const Catalog& catalog) { return Dump(CatalogToJson(catalog)); }

std::string RenderScenario(const ScenarioContext& scenario) { return Dump(ScenarioToJson(scenario)); }

// ---------------------------------------------------------------------------
// Documents

std::string RenderScores(std::span<const EssCoordinates> scores, const Catalog& catalog,
                         OutputFormat format) {
  if (scores.empty()) throw DomainError("no scores to render");
  switch (format) {
    case OutputFormat::kMachine:
      return Dump(ScoresToJson(scores));
    case OutputFormat::kCsv: {
      std::string out = CsvHeader({"id", "technique", "c_prime", "level_c", "u_prime", "level_u",
                                   "d_prime", "level_d"});
      for (const auto& s : scores) {
        out += CsvLine({Str(s.technique_id), Str(NameOf(catalog, s.technique_id)),
                        Num(FormatFixed(s.adjusted.c, 2)), Str(LevelName(s.levels[0])),
                        Num(FormatFixed(s.adjusted.u, 2)), Str(LevelName(s.levels[1])),
                        Num(FormatFixed(s.adjusted.d, 2)), Str(LevelName(s.levels[2]))});
      }
      return out;
    }
    case OutputFormat::kTable:
      break;
  }
  TextTable table({"Technique", "C'", "Level", "U'", "Level", "D'", "Level"},
                  {Align::kLeft, Align::kRight, Align::kLeft, Align::kRight, Align::kLeft,
                   Align::kRight, Align::kLeft});
  for (const auto& s : scores) {
    table.AddRow({NameOf(catalog, s.technique_id), FormatFixed(s.adjusted.c, 2),
                  std::string(LevelName(s.levels[0])), FormatFixed(s.adjusted.u, 2),
                  std::string(LevelName(s.levels[1])), FormatFixed(s.adjusted.d, 2),
                  std::string(LevelName(s.levels[2]))});
  }
  return table.Render();
}

std::string RenderSelection(std::span<const SelectionResult> results, const Catalog& catalog,
                            RatioMode mode, OutputFormat format) {
  if (results.empty()) throw DomainError("no selection results to render");
  switch (format) {
    case OutputFormat::kMachine:
      return Dump(SelectionToJson(results, mode));
    case OutputFormat::kCsv: {
      std::string out = CsvHeader({"id", "technique", "utility", "resource_cost", "efficiency_ratio",
                                   "efficiency_score", "latency_fit", "pareto"});
      for (const auto& r : results) {
        out += CsvLine({Str(r.technique_id), Str(NameOf(catalog, r.technique_id)),
                        Num(FormatFixed(r.utility, 2)), Num(FormatFixed(r.resource_cost, 2)),
                        Num(FormatFixed(r.efficiency_ratio, 1)), Num(FormatRating(r.efficiency_rating)),
                        Str(FeasibilityWord(r.feasibility)), Str(r.on_pareto_frontier ? "yes" : "no")});
      }
      return out;
    }
    case OutputFormat::kTable:
      break;
  }
  TextTable table({"Technique", "U", "R", "U/R", "Eff. Score", "Latency Fit"},
                  {Align::kLeft, Align::kRight, Align::kRight, Align::kRight, Align::kRight,
                   Align::kLeft});
  std::vector<std::string> frontier;
  for (const auto& r : results) {
    table.AddRow({NameOf(catalog, r.technique_id), FormatFixed(r.utility, 2),
                  FormatFixed(r.resource_cost, 2), FormatFixed(r.efficiency_ratio, 1),
                  FormatRating(r.efficiency_rating), std::string(FeasibilityGlyph(r.feasibility))});
    if (r.on_pareto_frontier) frontier.push_back(r.technique_id);
  }
  return table.Render() + "ratio mode: " + std::string(RatioModeName(mode)) +
         "\nPareto frontier: " + JoinIds(frontier, ", ") + "\n";
}

std::string RenderPlan(const TierPlan& plan, const Catalog& catalog, OutputFormat format) {
  switch (format) {
    case OutputFormat::kMachine:
      return Dump(PlanToJson(plan));
    case OutputFormat::kCsv: {
      std::string out = CsvHeader({"tier", "id", "technique", "evidence", "value", "utility",
                                   "latency_fit", "warnings"});
      for (const auto& section : kTierSections) {
        const auto& pick = plan.At(section.tier);
        const std::string warnings = JoinIds(WarningsFor(plan, section.tier), "; ");
        if (pick) {
          out += CsvLine({Num(std::to_string(static_cast<int>(section.tier))), Str(pick->technique_id),
                          Str(NameOf(catalog, pick->technique_id)), Str(pick->evidence_key),
                          Num(EvidenceDisplay(*pick)), Num(FormatFixed(pick->utility, 2)),
                          Str(FeasibilityWord(pick->feasibility)), Str(warnings)});
        } else {
          out += CsvLine({Num(std::to_string(static_cast<int>(section.tier))), Str(""), Str(""), Str(""),
                          Num(""), Num(""), Str(""), Str(warnings)});
        }
      }
      return out;
    }
    case OutputFormat::kTable:
      break;
  }
  std::string out;
  for (const auto& section : kTierSections) {
    const auto& pick = plan.At(section.tier);
    out += std::string(section.title) + ": ";
    if (pick) {
      out += NameOf(catalog, pick->technique_id) + " [" + pick->technique_id + "]\n";
      out += "  " + EvidenceLabel(pick->evidence_key) + " " + EvidenceDisplay(*pick) + "; utility " +
             FormatFixed(pick->utility, 2) + "; latency fit " +
             std::string(FeasibilityGlyph(pick->feasibility)) + "\n";
    } else {
      out += "(empty)\n";
    }
    for (const auto& w : WarningsFor(plan, section.tier)) out += "  warning: " + w + "\n";
  }
  return out;
}

std::string RenderProvenance(const ProvenanceTrail& trail, OutputFormat format) {
  switch (format) {
    case OutputFormat::kMachine:
      return Dump(ProvenanceToJson(trail));
    case OutputFormat::kCsv: {
      std::string out = CsvHeader({"stage", "inputs_digest", "parameters", "outputs"});
      for (const auto& r : trail.records) {
        out += CsvLine({Str(r.stage), Str(r.inputs_digest), Str(r.parameters.dump()), Str(r.outputs.dump())});
      }
      return out;
    }
    case OutputFormat::kTable:
      break;
  }
  std::string out;
  for (std::size_t i = 0; i < trail.records.size(); ++i) {
    const auto& r = trail.records[i];
    out += std::to_string(i + 1) + ". " + r.stage + "  (" + r.inputs_digest + ")\n";
    out += "   parameters: " + r.parameters.dump() + "\n";
    out += "   outputs:    " + r.outputs.dump() + "\n";
  }
  if (!trail.generated_at.empty()) out += "generated at " + trail.generated_at + "\n";
  return out;
}

std::string RenderSweep(const SweepReport& report, OutputFormat format) {
  auto tau = [&](std::size_t i) -> std::string {
    if (i == 0) return "";
    const auto& s = report.stability[i - 1];
    return s ? FormatFixed(*s, 3) : "";
  };
  switch (format) {
    case OutputFormat::kMachine:
      return Dump(SweepToJson(report));
    case OutputFormat::kCsv: {
      std::string out = CsvHeader({"value", "valid", "ranking_by_ratio", "ranking_by_utility", "tier1",
                                   "tier2", "tier3", "tau_b_prev", "error"});
      for (std::size_t i = 0; i < report.points.size(); ++i) {
        const auto& p = report.points[i];
        out += CsvLine({Num(FormatFixed(p.value, 6)), Str(p.valid ? "yes" : "no"),
                        Str(JoinIds(p.ranking_by_ratio, ">")), Str(JoinIds(p.ranking_by_utility, ">")),
                        Str(PlanTierId(p.plan, Tier::kAlwaysOn)), Str(PlanTierId(p.plan, Tier::kSelective)),
                        Str(PlanTierId(p.plan, Tier::kPeriodic)), Num(tau(i)), Str(p.error)});
      }
      return out;
    }
    case OutputFormat::kTable:
      break;
  }
  TextTable table({std::string(SweepParameterName(report.parameter)), "Ratio ranking", "Utility ranking",
                   "Tier 1", "Tier 2", "Tier 3", "tau-b"},
                  {Align::kRight, Align::kLeft, Align::kLeft, Align::kLeft, Align::kLeft, Align::kLeft,
                   Align::kRight});
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto& p = report.points[i];
    if (!p.valid) {
      table.AddRow({FormatFixed(p.value, 4), "invalid: " + p.error, "", "", "", "", tau(i)});
      continue;
    }
    table.AddRow({FormatFixed(p.value, 4), JoinIds(p.ranking_by_ratio, " > "),
                  JoinIds(p.ranking_by_utility, " > "), PlanTierId(p.plan, Tier::kAlwaysOn),
                  PlanTierId(p.plan, Tier::kSelective), PlanTierId(p.plan, Tier::kPeriodic), tau(i)});
  }
  std::string changes;
  for (double v : report.change_points) changes += (changes.empty() ? "" : ", ") + FormatFixed(v, 4);
  return table.Render() + "ratio mode: " + std::string(RatioModeName(report.ratio_mode)) +
         "\ntier plan change points: " + (changes.empty() ? "none" : changes) + "\n";
}

}  // namespace ess
