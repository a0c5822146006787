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

#ifndef ESS_RECOMMENDATION_HPP_
#define ESS_RECOMMENDATION_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ess/scoring.hpp"
#include "ess/selection.hpp"

namespace ess {

enum class Tier { kAlwaysOn = 1, kSelective = 2, kPeriodic = 3 };

// Why a technique was placed in a tier. `evidence_key` names the quantity
// that won the tier: "efficiency_ratio" (tier 1), "u_prime" (tier 2) or
// "c_prime" (tier 3).
struct TierPick {
  std::string technique_id;
  std::string evidence_key;
  double evidence_value = 0.0;
  double utility = 0.0;
  Feasibility feasibility = Feasibility::kInfeasibleOnline;

  bool operator==(const TierPick&) const = default;
};

struct TierPlan {
  std::optional<TierPick> tier1_always_on;
  std::optional<TierPick> tier2_selective;
  std::optional<TierPick> tier3_periodic;
  std::vector<std::string> warnings;

  const std::optional<TierPick>& At(Tier tier) const;

  bool operator==(const TierPlan&) const = default;
};

// Tier 1: best efficiency ratio among techniques that fit the budget.
// Tier 2: best adjusted U among fitting or marginal techniques, tier 1 excluded.
// Tier 3: best adjusted C among everything left, no latency gate.
// Ties fall back to utility (descending) and id (ascending). Unfillable tiers
// stay empty and add a warning. Throws DomainError on empty or mismatched input.
TierPlan SynthesizeTiers(std::span<const EssCoordinates> scores,
                         std::span<const SelectionResult> selection);

}  // namespace ess

#endif  // ESS_RECOMMENDATION_HPP_
