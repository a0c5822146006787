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

#ifndef ESS_PIPELINE_HPP_
#define ESS_PIPELINE_HPP_

#include <string>
#include <vector>

#include "ess/catalog.hpp"
#include "ess/provenance.hpp"
#include "ess/recommendation.hpp"
#include "ess/scoring.hpp"
#include "ess/selection.hpp"

namespace ess {

inline constexpr std::string_view kEngineVersion = "0.1.0";

struct EvaluationOptions {
  std::string modality = "tabular";
  RatioMode ratio_mode = RatioMode::kFullPrecision;
  bool record_provenance = true;
};

// Everything one run of the pipeline produces. `catalog` is the applicable
// sub-catalog actually scored.
struct Evaluation {
  Catalog catalog;
  ScenarioContext scenario;
  RatioMode ratio_mode = RatioMode::kFullPrecision;
  std::vector<EssCoordinates> scores;
  std::vector<SelectionResult> selection;
  TierPlan plan;
  ProvenanceTrail provenance;
};

// filter -> aggregate -> adjust -> discretise -> select -> recommend.
// Validates the catalog and scenario first. Throws DomainError when no
// technique applies to the requested modality.
Evaluation Evaluate(const Catalog& catalog, const ScenarioContext& scenario,
                    const EvaluationOptions& options = {});

}  // namespace ess

#endif  // ESS_PIPELINE_HPP_
