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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace ess {
namespace {

using nlohmann::json;

Evaluation PaperEvaluation(RatioMode mode = RatioMode::kPaperRounded) {
  EvaluationOptions opts;
  opts.ratio_mode = mode;
  return Evaluate(BuiltinPaperCatalog(), SubstitutionScenario(), opts);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(RenderScores, AlignedTableOfBuiltinCoordinates) {
  const Evaluation ev = PaperEvaluation();
  const std::string table = RenderScores(ev.scores, ev.catalog, OutputFormat::kTable);
  const std::string expected =
      "Technique          C'  Level     U'  Level     D'  Level\n"
      "---------------------------------------------------------\n"
      "SHAP             3.91  High    3.30  Medium  4.70  High\n"
      "LIME             2.76  Medium  4.40  High    3.50  High\n"
      "Counterfactuals  2.76  Medium  5.00  High    3.50  High\n"
      "Rule Extraction  5.00  High    2.86  Medium  3.80  High\n"
      "Prototypes       2.30  Low     5.00  High    3.00  Medium\n";
  EXPECT_EQ(table, expected);
}

TEST(RenderScores, CsvParsesBackToSameValues) {
  const Evaluation ev = PaperEvaluation();
  const auto rows = oracle::ParseCsv(RenderScores(ev.scores, ev.catalog, OutputFormat::kCsv));
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"id", "technique", "c_prime", "level_c", "u_prime",
                                               "level_u", "d_prime", "level_d"}));
  for (std::size_t i = 0; i < ev.scores.size(); ++i) {
    const auto& row = rows[i + 1];
    const auto& s = ev.scores[i];
    EXPECT_EQ(row[0], s.technique_id);
    EXPECT_NEAR(std::stod(row[2]), s.adjusted.c, 0.005 + 1e-12);
    EXPECT_NEAR(std::stod(row[4]), s.adjusted.u, 0.005 + 1e-12);
    EXPECT_NEAR(std::stod(row[6]), s.adjusted.d, 0.005 + 1e-12);
    EXPECT_EQ(row[3], LevelName(s.levels[0]));
  }
  EXPECT_EQ(rows[4][1], "Rule Extraction");
}

TEST(RenderScores, EmptyIsAnError) {
  std::vector<EssCoordinates> none;
  EXPECT_THROW(RenderScores(none, {}, OutputFormat::kTable), DomainError);
}

TEST(RenderSelection, RoundedModeRows) {
  const Evaluation ev = PaperEvaluation();
  const auto lines = Lines(RenderSelection(ev.selection, ev.catalog, RatioMode::kPaperRounded, OutputFormat::kTable));
  EXPECT_EQ(lines[2], "SHAP             3.82  0.25  15.3           4  ✓");
  EXPECT_EQ(lines[5], "Rule Extraction  3.90  0.50   7.8           2  ×");
  EXPECT_EQ(lines[4], "Counterfactuals  3.80  0.33  11.5           3  ≈");

  const auto csv = oracle::ParseCsv(
      RenderSelection(ev.selection, ev.catalog, RatioMode::kPaperRounded, OutputFormat::kCsv));
  ASSERT_EQ(csv.size(), 6u);
  EXPECT_EQ(csv[1], (std::vector<std::string>{"SHAP", "SHAP", "3.82", "0.25", "15.3", "4", "fits", "yes"}));
  EXPECT_EQ(csv[4], (std::vector<std::string>{"RULE", "Rule Extraction", "3.90", "0.50", "7.8", "2",
                                              "infeasible", "yes"}));
}

TEST(RenderSelection, SingleRow) {
  const Evaluation ev = PaperEvaluation();
  std::vector<SelectionResult> one{ev.selection[0]};
  const auto csv = oracle::ParseCsv(RenderSelection(one, ev.catalog, RatioMode::kFullPrecision, OutputFormat::kCsv));
  EXPECT_EQ(csv.size(), 2u);
}

TEST(RenderPlan, BuiltinPlanSections) {
  const Evaluation ev = PaperEvaluation();
  const std::string text = RenderPlan(ev.plan, ev.catalog, OutputFormat::kTable);
  EXPECT_NE(text.find("Tier 1 - Always-on (real-time pipeline): SHAP [SHAP]\n  ratio 15.3"), std::string::npos);
  EXPECT_NE(text.find("Tier 2 - Selective (dispute and analyst review): Counterfactuals [CF]\n  U' 5.00"),
            std::string::npos);
  EXPECT_NE(text.find("Tier 3 - Periodic (offline compliance and governance): Rule Extraction [RULE]\n  C' 5.00"),
            std::string::npos);
}

TEST(RenderPlan, EmptyTierKeepsSectionWithWarning) {
  TierPlan plan = PaperEvaluation().plan;
  plan.tier3_periodic.reset();
  plan.warnings.push_back("tier 3 (periodic): no technique left after tiers 1-2; tier left empty");
  const std::string text = RenderPlan(plan, BuiltinPaperCatalog(), OutputFormat::kTable);
  EXPECT_NE(text.find("Tier 3 - Periodic (offline compliance and governance): (empty)\n  warning: tier 3"),
            std::string::npos);
  const auto csv = oracle::ParseCsv(RenderPlan(plan, BuiltinPaperCatalog(), OutputFormat::kCsv));
  ASSERT_EQ(csv.size(), 4u);
  EXPECT_EQ(csv[3][1], "");
  EXPECT_NE(csv[3][7].find("tier 3"), std::string::npos);
}

TEST(MachineFormat, RoundTripsLosslessly) {
  for (auto mode : {RatioMode::kFullPrecision, RatioMode::kPaperRounded}) {
    const Evaluation ev = PaperEvaluation(mode);
    const json doc = json::parse(RenderMachineDocument(ev));
    for (const char* key : {"catalog", "scenario", "scores", "selection", "plan", "provenance", "engine_version"}) {
      EXPECT_TRUE(doc.contains(key)) << key;
    }
    EXPECT_EQ(doc.size(), 7u);
    EXPECT_EQ(ScoresFromJson(doc["scores"]), ev.scores);
    EXPECT_EQ(SelectionFromJson(doc["selection"]), ev.selection);
    EXPECT_EQ(PlanFromJson(doc["plan"]), ev.plan);
    EXPECT_EQ(ProvenanceFromJson(doc["provenance"]), ev.provenance);
    EXPECT_EQ(LoadCatalog(doc["catalog"].dump()), ev.catalog);
    EXPECT_EQ(LoadScenario(doc["scenario"].dump()), ev.scenario);
    EXPECT_EQ(PlanFromJson(json::parse(RenderPlan(ev.plan, ev.catalog, OutputFormat::kMachine))), ev.plan);
  }
}

TEST(MachineFormat, CarriesDisplayStrings) {
  const json doc = json::parse(RenderMachineDocument(PaperEvaluation()));
  EXPECT_EQ(doc["scores"][0]["display"]["c_prime"], "3.91");
  EXPECT_EQ(doc["selection"]["results"][1]["display"]["efficiency_ratio"], "10.8");
  EXPECT_EQ(doc["selection"]["ratio_mode"], "paper");
  EXPECT_EQ(doc["plan"]["tier1_always_on"]["display"], "15.3");
  EXPECT_EQ(doc["engine_version"], std::string(kEngineVersion));
}

TEST(MachineFormat, RandomPlansRoundTrip) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> v(0.0, 20.0);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 300; ++i) {
    TierPlan plan;
    auto pick = [&](const char* key) -> std::optional<TierPick> {
      if (!coin(rng)) return std::nullopt;
      return TierPick{"id" + std::to_string(i), key, v(rng), v(rng),
                      static_cast<Feasibility>(i % 3)};
    };
    plan.tier1_always_on = pick("efficiency_ratio");
    plan.tier2_selective = pick("u_prime");
    plan.tier3_periodic = pick("c_prime");
    if (coin(rng)) plan.warnings.push_back("tier 2 \"quoted\", with comma");
    EXPECT_EQ(PlanFromJson(PlanToJson(plan)), plan);
  }
}

TEST(Provenance, TrailCoversEveryStage) {
  const Evaluation ev = PaperEvaluation();
  std::vector<std::string> stages;
  for (const auto& r : ev.provenance.records) stages.push_back(r.stage);
  EXPECT_EQ(stages, (std::vector<std::string>{"catalog", "aggregation", "adjustment", "discretisation",
                                              "selection", "recommendation"}));
  const ProvenanceRecord* adj = ev.provenance.Find("adjustment");
  ASSERT_NE(adj, nullptr);
  EXPECT_EQ(adj->parameters["gamma"], json({1.15, 1.10, 1.00}));
  EXPECT_DOUBLE_EQ(adj->outputs["SHAP"]["c"].get<double>(), ev.scores[0].adjusted.c);
  const ProvenanceRecord* sel = ev.provenance.Find("selection");
  EXPECT_DOUBLE_EQ(sel->outputs["LIME"]["efficiency_ratio"].get<double>(), 10.8);
  for (const auto& r : ev.provenance.records) EXPECT_EQ(r.inputs_digest.rfind("fnv1a64:", 0), 0u);
}

TEST(Provenance, NonDefaultWeightsAppearVerbatim) {
  ScenarioContext ctx = SubstitutionScenario();
  ctx.axis_weights = AxisWeights{0.7, 0.3, 0.55, 0.45, 0.5, 0.25, 0.25};
  const Evaluation ev = Evaluate(BuiltinPaperCatalog(), ctx);
  const json& w = ev.provenance.Find("aggregation")->parameters["axis_weights"];
  EXPECT_EQ(w["compliance"]["audit"].get<double>(), 0.7);
  EXPECT_EQ(w["user"]["action"].get<double>(), 0.45);
  EXPECT_EQ(w["developer"]["eff"].get<double>(), 0.25);
  EXPECT_NE(RenderProvenance(ev.provenance, OutputFormat::kTable).find("\"audit\":0.7"), std::string::npos);
}

TEST(Provenance, DeterministicAcrossRuns) {
  const std::string a = RenderProvenance(PaperEvaluation().provenance, OutputFormat::kMachine);
  const std::string b = RenderProvenance(PaperEvaluation().provenance, OutputFormat::kMachine);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Fnv1a64Digest(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(Fnv1a64Digest("a"), "fnv1a64:af63dc4c8601ec8c");
}

TEST(RenderSweep, FormatsParse) {
  const SweepReport r = Sweep(BuiltinPaperCatalog(), SubstitutionScenario(),
                              {SweepParameter::kGammaC, 1.0, 1.3, 0.05});
  const json j = json::parse(RenderSweep(r, OutputFormat::kMachine));
  EXPECT_EQ(j["points"].size(), 7u);
  EXPECT_EQ(j["stability"].size(), 6u);
  EXPECT_EQ(j["stability_metric"], "kendall_tau_b");
  const auto csv = oracle::ParseCsv(RenderSweep(r, OutputFormat::kCsv));
  EXPECT_EQ(csv.size(), 8u);
  EXPECT_EQ(csv[2][7], "1.000");
  const std::string text = RenderSweep(r, OutputFormat::kTable);
  EXPECT_NE(text.find("tier plan change points: none"), std::string::npos);
}

}  // namespace
}  // namespace ess
