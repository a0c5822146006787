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

#ifndef ESS_SENSITIVITY_HPP_
#define ESS_SENSITIVITY_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ess/catalog.hpp"
#include "ess/recommendation.hpp"
#include "ess/scoring.hpp"
#include "ess/selection.hpp"

namespace ess {

enum class SweepParameter {
  kGammaC,
  kGammaU,
  kGammaD,
  kSelectionWeightC,
  kSelectionWeightU,
  kSelectionWeightD,
  kFitFraction,
};

// CLI spelling: gamma_c, gamma_u, gamma_d, weight_c, weight_u, weight_d,
// fit_fraction.
std::string_view SweepParameterName(SweepParameter p);
std::optional<SweepParameter> ParseSweepParameter(std::string_view name);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kGammaC;
  double from = 1.0;
  double to = 1.0;
  double step = 0.1;

  // Throws ValidationError when step <= 0, from > to or a bound is not finite.
  void Validate() const;

  // Inclusive grid from `from` to `to`. A trailing partial step is clamped
  // to `to`.
  std::vector<double> Grid() const;
};

// Returns `base` with one parameter replaced. Selection-weight sweeps rescale
// the other two weights proportionally so the triple still sums to one.
ScenarioContext WithParameter(const ScenarioContext& base, SweepParameter p, double value);

struct SweepPoint {
  double value = 0.0;
  bool valid = true;
  std::string error;  // set when !valid
  std::vector<std::string> ranking_by_ratio;
  std::vector<std::string> ranking_by_utility;
  std::optional<TierPlan> plan;

  bool operator==(const SweepPoint&) const = default;
};

struct SweepReport {
  SweepParameter parameter = SweepParameter::kGammaC;
  RatioMode ratio_mode = RatioMode::kFullPrecision;
  std::vector<SweepPoint> points;
  // Kendall tau-b of the ratio rankings at consecutive points; empty when
  // either neighbour is invalid. Size is points.size() - 1.
  std::vector<std::optional<double>> stability;
  // Parameter values at which the tier plan differs from the previous valid
  // point.
  std::vector<double> change_points;

  bool operator==(const SweepReport&) const = default;
};

// Re-runs the whole pipeline once per grid point. Points whose scenario is
// invalid are reported and skipped. Grid points are evaluated concurrently
// and assembled in grid order.
SweepReport Sweep(const Catalog& catalog, const ScenarioContext& ctx, const SweepSpec& spec,
                  RatioMode mode = RatioMode::kFullPrecision,
                  std::string_view modality = "tabular");

// Tie-aware Kendall rank correlation of two paired samples.
double KendallTauB(std::span<const double> x, std::span<const double> y);

// Kendall tau-b between two orderings of the same id set (size >= 2).
// Throws DomainError if the sets differ.
double RankStability(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace ess

#endif  // ESS_SENSITIVITY_HPP_
