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

#ifndef ESS_SELECTION_HPP_
#define ESS_SELECTION_HPP_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ess/catalog.hpp"
#include "ess/scoring.hpp"

namespace ess {

// Ordered for gating: kFits > kMarginal > kInfeasibleOnline.
enum class Feasibility { kInfeasibleOnline = 0, kMarginal = 1, kFits = 2 };

std::string_view FeasibilityWord(Feasibility f);   // fits / marginal / infeasible
std::string_view FeasibilityGlyph(Feasibility f);  // ✓ / ≈ / ×

enum class RatioMode {
  // utility / cost at full precision.
  kFullPrecision,
  // Round utility and cost to 2 places, divide, round to 1 place. This
  // matches hand-computed tables that show two-decimal intermediates.
  kPaperRounded,
};

std::string_view RatioModeName(RatioMode mode);  // "full" / "paper"

struct SelectionResult {
  std::string technique_id;
  AxisTriple adjusted;
  double efficiency_rating = 1.0;
  double utility = 0.0;
  double resource_cost = 1.0;
  double efficiency_ratio = 0.0;
  Feasibility feasibility = Feasibility::kInfeasibleOnline;
  bool on_pareto_frontier = false;

  bool operator==(const SelectionResult&) const = default;
};

double Utility(const AxisTriple& adjusted, const SelectionWeights& weights);

// 1 / efficiency; efficiency >= 1 so the cost lies in [0.2, 1].
double ResourceCost(double efficiency);

double EfficiencyRatio(double utility, double cost, RatioMode mode);

// Offline-only techniques are infeasible online. Online estimates are
// compared (inclusively) against fit_fraction * explanation budget (fits)
// and the explanation budget itself (marginal).
Feasibility ClassifyLatency(const LatencyProfile& latency, const ScenarioContext& ctx);

struct FrontierPoint {
  std::string technique_id;
  AxisTriple adjusted;
};

// True when `a` is at least as good as `b` on every axis and strictly
// better on one (all axes maximised).
bool Dominates(const AxisTriple& a, const AxisTriple& b);

// Ids of the non-dominated points. Identical triples do not dominate each
// other. Throws DomainError for empty input or duplicate ids.
std::set<std::string> ParetoFrontier(std::span<const FrontierPoint> points);

// Computes utility, cost, ratio, feasibility and frontier membership for
// every scored technique. `scores` must align with `catalog` by id.
std::vector<SelectionResult> Select(const Catalog& catalog,
                                    std::span<const EssCoordinates> scores,
                                    const ScenarioContext& ctx, RatioMode mode);

enum class RankKey { kUtility, kRatio, kAxisC, kAxisU, kAxisD };

// Descending by key, then utility descending, then id ascending.
std::vector<SelectionResult> Rank(std::span<const SelectionResult> results, RankKey key);

std::vector<std::string> RankedIds(std::span<const SelectionResult> results, RankKey key);

}  // namespace ess

#endif  // ESS_SELECTION_HPP_
