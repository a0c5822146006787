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

#ifndef ESS_REPORT_HPP_
#define ESS_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ess/catalog.hpp"
#include "ess/pipeline.hpp"
#include "ess/provenance.hpp"
#include "ess/recommendation.hpp"
#include "ess/scoring.hpp"
#include "ess/selection.hpp"
#include "ess/sensitivity.hpp"

namespace ess {

enum class OutputFormat { kTable, kCsv, kMachine };

std::optional<OutputFormat> ParseOutputFormat(std::string_view name);  // table|csv|machine

// JSON conversions. The machine format carries full-precision numbers plus,
// where a value is shown in tables, its rendered string under "display".
nlohmann::json CatalogToJson(const Catalog& catalog);
nlohmann::json ScenarioToJson(const ScenarioContext& scenario);
nlohmann::json ScoresToJson(std::span<const EssCoordinates> scores);
nlohmann::json SelectionToJson(std::span<const SelectionResult> results, RatioMode mode);
nlohmann::json PlanToJson(const TierPlan& plan);
nlohmann::json ProvenanceToJson(const ProvenanceTrail& trail);
nlohmann::json SweepToJson(const SweepReport& report);

std::vector<EssCoordinates> ScoresFromJson(const nlohmann::json& j);
std::vector<SelectionResult> SelectionFromJson(const nlohmann::json& j);
TierPlan PlanFromJson(const nlohmann::json& j);
ProvenanceTrail ProvenanceFromJson(const nlohmann::json& j);

// Catalog file document; LoadCatalog(RenderCatalog(c)) == c.
std::string RenderCatalog(const Catalog& catalog);
std::string RenderScenario(const ScenarioContext& scenario);

// Technique, C', level, U', level, D', level in the order given. Names are
// looked up in `catalog`; unknown ids print as themselves. Throws DomainError
// when `scores` is empty.
std::string RenderScores(std::span<const EssCoordinates> scores, const Catalog& catalog,
                         OutputFormat format);

// Technique, utility, cost, ratio, efficiency rating, latency fit.
std::string RenderSelection(std::span<const SelectionResult> results, const Catalog& catalog,
                            RatioMode mode, OutputFormat format);

std::string RenderPlan(const TierPlan& plan, const Catalog& catalog, OutputFormat format);

std::string RenderProvenance(const ProvenanceTrail& trail, OutputFormat format);

std::string RenderSweep(const SweepReport& report, OutputFormat format);

// The complete machine document for one evaluation: catalog, scenario,
// scores, selection, plan, provenance, engine_version.
nlohmann::json EvaluationToJson(const Evaluation& evaluation);
std::string RenderMachineDocument(const Evaluation& evaluation);

}  // namespace ess

#endif  // ESS_REPORT_HPP_
