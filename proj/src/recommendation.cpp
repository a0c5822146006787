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

#include "ess/recommendation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ess {
namespace {

struct Candidate {
  const SelectionResult* selection;
  const EssCoordinates* score;
};

// Highest `value`, then highest utility, then smallest id.
std::optional<Candidate> Best(const std::vector<Candidate>& candidates,
                              const std::function<bool(const Candidate&)>& eligible,
                              const std::function<double(const Candidate&)>& value) {
  std::optional<Candidate> best;
  for (const auto& c : candidates) {
    if (!eligible(c)) continue;
    if (!best) {
      best = c;
      continue;
    }
    const double v = value(c);
    const double bv = value(*best);
    if (v != bv) {
      if (v > bv) best = c;
    } else if (c.selection->utility != best->selection->utility) {
      if (c.selection->utility > best->selection->utility) best = c;
    } else if (c.selection->technique_id < best->selection->technique_id) {
      best = c;
    }
  }
  return best;
}

TierPick MakePick(const Candidate& c, std::string key, double value) {
  return TierPick{c.selection->technique_id, std::move(key), value, c.selection->utility,
                  c.selection->feasibility};
}

}  // namespace

const std::optional<TierPick>& TierPlan::At(Tier tier) const {
  switch (tier) {
    case Tier::kAlwaysOn: return tier1_always_on;
    case Tier::kSelective: return tier2_selective;
    case Tier::kPeriodic: break;
  }
  return tier3_periodic;
}

TierPlan SynthesizeTiers(std::span<const EssCoordinates> scores,
                         std::span<const SelectionResult> selection) {
  if (scores.empty() || selection.empty()) {
    throw DomainError("cannot build a tier plan from an empty technique set");
  }
  std::map<std::string, const EssCoordinates*> by_id;
  for (const auto& s : scores) by_id[s.technique_id] = &s;
  if (by_id.size() != scores.size() || selection.size() != scores.size()) {
    throw DomainError("scores and selection results must cover the same technique ids");
  }
  std::vector<Candidate> candidates;
  for (const auto& r : selection) {
    auto it = by_id.find(r.technique_id);
    if (it == by_id.end()) {
      throw DomainError("selection result " + r.technique_id + " has no matching score");
    }
    candidates.push_back({&r, it->second});
  }

  TierPlan plan;
  std::set<std::string> taken;
  auto free = [&](const Candidate& c) { return !taken.contains(c.selection->technique_id); };

  auto tier1 = Best(
      candidates,
      [&](const Candidate& c) { return c.selection->feasibility == Feasibility::kFits; },
      [](const Candidate& c) { return c.selection->efficiency_ratio; });
  if (tier1) {
    plan.tier1_always_on = MakePick(*tier1, "efficiency_ratio", tier1->selection->efficiency_ratio);
    taken.insert(tier1->selection->technique_id);
  } else {
    plan.warnings.push_back(
        "tier 1 (always-on): no technique fits the online explanation budget; tier left empty");
  }

  auto tier2 = Best(
      candidates,
      [&](const Candidate& c) {
        return free(c) && c.selection->feasibility != Feasibility::kInfeasibleOnline;
      },
      [](const Candidate& c) { return c.score->adjusted.u; });
  if (tier2) {
    plan.tier2_selective = MakePick(*tier2, "u_prime", tier2->score->adjusted.u);
    taken.insert(tier2->selection->technique_id);
    if (tier2->selection->feasibility == Feasibility::kMarginal) {
      plan.warnings.push_back("tier 2 (selective): " + tier2->selection->technique_id +
                              " is marginal for the latency budget; extending it to every "
                              "blocking event risks exceeding the budget under peak load");
    }
  } else {
    plan.warnings.push_back(
        "tier 2 (selective): no remaining technique runs within the online explanation budget; "
        "tier left empty");
  }

  auto tier3 = Best(
      candidates, free, [](const Candidate& c) { return c.score->adjusted.c; });
  if (tier3) {
    plan.tier3_periodic = MakePick(*tier3, "c_prime", tier3->score->adjusted.c);
    if (tier3->selection->feasibility != Feasibility::kInfeasibleOnline) {
      plan.warnings.push_back("tier 3 (periodic): " + tier3->selection->technique_id +
                              " is not offline-only; chosen by compliance score regardless of "
                              "computation mode");
    }
  } else {
    plan.warnings.push_back(
        "tier 3 (periodic): no technique left after tiers 1-2; tier left empty");
  }
  return plan;
}

}  // namespace ess
