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

#ifndef ESS_SCORING_HPP_
#define ESS_SCORING_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ess/catalog.hpp"
#include "ess/error.hpp"

namespace ess {

// Tolerance on the sum-to-one constraint of every weight group.
inline constexpr double kWeightSumTolerance = 1e-9;

// Projection weights from the seven properties onto the three axes. Each
// axis group must be non-negative and sum to one.
struct AxisWeights {
  // Compliance axis.
  double audit = 0.6;
  double trace = 0.4;
  // User axis.
  double compr = 0.6;
  double action = 0.4;
  // Developer axis.
  double fidelity = 0.5;
  double debug = 0.4;
  double eff = 0.1;

  std::vector<ValidationFinding> Check(std::string_view subject) const;

  bool operator==(const AxisWeights&) const = default;
};

// A (compliance, user, developer) score triple.
struct AxisTriple {
  double c = 0.0;
  double u = 0.0;
  double d = 0.0;

  bool operator==(const AxisTriple&) const = default;
};

// Weights of the adjusted axes in the combined utility.
struct SelectionWeights {
  double c = 0.4;
  double u = 0.4;
  double d = 0.2;

  bool operator==(const SelectionWeights&) const = default;
};

struct ScenarioContext {
  std::string name = "substitution";
  double gamma_c = 1.15;
  double gamma_u = 1.10;
  double gamma_d = 1.00;
  // End-to-end budget; the explanation may use budget minus reserved.
  double latency_budget_ms = 200.0;
  double reserved_overhead_ms = 100.0;
  // Share of the explanation budget under which a technique "fits".
  double fit_fraction = 0.8;
  SelectionWeights selection_weights;
  // Overrides the default projection weights when set.
  std::optional<AxisWeights> axis_weights;

  AxisWeights EffectiveAxisWeights() const { return axis_weights.value_or(AxisWeights{}); }
  double ExplanationBudgetMs() const { return latency_budget_ms - reserved_overhead_ms; }

  std::vector<ValidationFinding> Check() const;
  void Validate() const;  // throws ValidationError

  bool operator==(const ScenarioContext&) const = default;
};

// Fraud-detection substitution preset: gammas (1.15, 1.10, 1.00), 200 ms
// budget with 100 ms reserved, fit fraction 0.8, selection (0.4, 0.4, 0.2).
ScenarioContext SubstitutionScenario();

// JSON scenario document with keys name, gamma_c, gamma_u, gamma_d,
// latency_budget_ms, reserved_overhead_ms, fit_fraction,
// selection_weights{c,u,d} and optional axis_weights.
ScenarioContext LoadScenario(std::string_view document);
ScenarioContext LoadScenarioFile(const std::filesystem::path& path);

enum class Level { kLow, kMedium, kHigh };

std::string_view LevelName(Level level);  // "Low" / "Medium" / "High"

struct EssCoordinates {
  std::string technique_id;
  AxisTriple raw;
  AxisTriple adjusted;
  std::array<Level, 3> levels{Level::kLow, Level::kLow, Level::kLow};

  bool operator==(const EssCoordinates&) const = default;
};

AxisTriple AggregateAxes(const PropertyVector& p, const AxisWeights& w);

// Per-axis gamma scaling, clipped to [1, 5].
AxisTriple ApplyContext(const AxisTriple& raw, const ScenarioContext& ctx);

// Bands: Low [1, 2.5), Medium [2.5, 3.5), High [3.5, 5].
Level Discretise(double score);

EssCoordinates ScoreTechnique(const Technique& t, const AxisWeights& w,
                              const ScenarioContext& ctx);

std::vector<EssCoordinates> ScoreCatalog(const Catalog& catalog,
                                         const ScenarioContext& ctx);

}  // namespace ess

#endif  // ESS_SCORING_HPP_
