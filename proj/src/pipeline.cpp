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

#include "ess/pipeline.hpp"

#include "ess/report.hpp"

namespace ess {
namespace {

using nlohmann::json;

json AxisWeightsJson(const AxisWeights& w) {
  return {{"compliance", {{"audit", w.audit}, {"trace", w.trace}}},
          {"user", {{"compr", w.compr}, {"action", w.action}}},
          {"developer", {{"fidelity", w.fidelity}, {"debug", w.debug}, {"eff", w.eff}}}};
}

json TripleJson(const AxisTriple& t) { return {{"c", t.c}, {"u", t.u}, {"d", t.d}}; }

ProvenanceTrail BuildTrail(const Catalog& full, const Evaluation& ev, const EvaluationOptions& opt) {
  ProvenanceTrail trail;
  const ScenarioContext& ctx = ev.scenario;

  json applicable = json::array();
  json properties = json::object();
  for (const auto& t : ev.catalog) {
    applicable.push_back(t.id);
    json p = json::object();
    for (std::size_t k = 0; k < kPropertyNames.size(); ++k) {
      p[std::string(kPropertyNames[k])] = PropertyAt(t.properties, k);
    }
    properties[t.id] = std::move(p);
  }
  trail.records.push_back({"catalog", DigestJson(CatalogToJson(full)),
                           {{"modality", opt.modality}},
                           {{"applicable", applicable}, {"properties", properties}}});

  json raw = json::object();
  json adjusted = json::object();
  json levels = json::object();
  for (const auto& s : ev.scores) {
    raw[s.technique_id] = TripleJson(s.raw);
    adjusted[s.technique_id] = TripleJson(s.adjusted);
    levels[s.technique_id] = {{"c", LevelName(s.levels[0])},
                              {"u", LevelName(s.levels[1])},
                              {"d", LevelName(s.levels[2])}};
  }
  trail.records.push_back({"aggregation", DigestJson(CatalogToJson(ev.catalog)),
                           {{"axis_weights", AxisWeightsJson(ctx.EffectiveAxisWeights())}},
                           raw});
  trail.records.push_back({"adjustment", DigestJson(raw),
                           {{"scenario", ctx.name},
                            {"gamma", {ctx.gamma_c, ctx.gamma_u, ctx.gamma_d}},
                            {"clip", {kMinRating, kMaxRating}}},
                           adjusted});
  trail.records.push_back(
      {"discretisation", DigestJson(adjusted),
       {{"bands", {{"Low", "[1.0, 2.5)"}, {"Medium", "[2.5, 3.5)"}, {"High", "[3.5, 5.0]"}}}},
       levels});

  json selection = json::object();
  for (const auto& r : ev.selection) {
    selection[r.technique_id] = {{"utility", r.utility},
                                 {"resource_cost", r.resource_cost},
                                 {"efficiency_ratio", r.efficiency_ratio},
                                 {"feasibility", FeasibilityWord(r.feasibility)},
                                 {"on_pareto_frontier", r.on_pareto_frontier}};
  }
  trail.records.push_back(
      {"selection", DigestJson({adjusted, properties}),
       {{"selection_weights",
         {{"c", ctx.selection_weights.c}, {"u", ctx.selection_weights.u}, {"d", ctx.selection_weights.d}}},
        {"latency_budget_ms", ctx.latency_budget_ms},
        {"reserved_overhead_ms", ctx.reserved_overhead_ms},
        {"fit_fraction", ctx.fit_fraction},
        {"ratio_mode", RatioModeName(ev.ratio_mode)},
        {"feasibility_rule",
         "fits: estimate <= fit_fraction*(budget-reserved); marginal: estimate <= "
         "budget-reserved; offline_only: infeasible"}},
       selection});

  trail.records.push_back(
      {"recommendation", DigestJson({adjusted, selection}),
       {{"tier1", "argmax efficiency_ratio where feasibility = fits"},
        {"tier2", "argmax u_prime where feasibility in {fits, marginal}, excluding tier 1"},
        {"tier3", "argmax c_prime over remaining techniques"},
        {"tie_break", "utility descending, then id ascending"}},
       PlanToJson(ev.plan)});
  return trail;
}

}  // namespace

Evaluation Evaluate(const Catalog& catalog, const ScenarioContext& scenario,
                    const EvaluationOptions& options) {
  ValidateCatalog(catalog);
  scenario.Validate();
  Evaluation ev;
  ev.catalog = FilterApplicable(catalog, options.modality);
  if (ev.catalog.empty()) {
    throw DomainError("no applicable techniques for modality \"" + options.modality + "\"");
  }
  ev.scenario = scenario;
  ev.ratio_mode = options.ratio_mode;
  ev.scores = ScoreCatalog(ev.catalog, scenario);
  ev.selection = Select(ev.catalog, ev.scores, scenario, options.ratio_mode);
  ev.plan = SynthesizeTiers(ev.scores, ev.selection);
  if (options.record_provenance) ev.provenance = BuildTrail(catalog, ev, options);
  return ev;
}

}  // namespace ess
