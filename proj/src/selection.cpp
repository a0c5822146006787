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

#include "ess/selection.hpp"

#include <algorithm>
#include <numeric>

#include "ess/numeric.hpp"

namespace ess {
namespace {

double KeyOf(const SelectionResult& r, RankKey key) {
  switch (key) {
    case RankKey::kUtility: return r.utility;
    case RankKey::kRatio: return r.efficiency_ratio;
    case RankKey::kAxisC: return r.adjusted.c;
    case RankKey::kAxisU: return r.adjusted.u;
    case RankKey::kAxisD: return r.adjusted.d;
  }
  return 0.0;
}

bool LexGreater(const AxisTriple& a, const AxisTriple& b) {
  if (a.c != b.c) return a.c > b.c;
  if (a.u != b.u) return a.u > b.u;
  return a.d > b.d;
}

}  // namespace

std::string_view FeasibilityWord(Feasibility f) {
  switch (f) {
    case Feasibility::kFits: return "fits";
    case Feasibility::kMarginal: return "marginal";
    case Feasibility::kInfeasibleOnline: return "infeasible";
  }
  return "?";
}

std::string_view FeasibilityGlyph(Feasibility f) {
  switch (f) {
    case Feasibility::kFits: return "✓";
    case Feasibility::kMarginal: return "≈";
    case Feasibility::kInfeasibleOnline: return "×";
  }
  return "?";
}

std::string_view RatioModeName(RatioMode mode) {
  return mode == RatioMode::kPaperRounded ? "paper" : "full";
}

double Utility(const AxisTriple& adjusted, const SelectionWeights& weights) {
  return weights.c * adjusted.c + weights.u * adjusted.u + weights.d * adjusted.d;
}

double ResourceCost(double efficiency) { return 1.0 / efficiency; }

double EfficiencyRatio(double utility, double cost, RatioMode mode) {
  if (mode == RatioMode::kFullPrecision) return utility / cost;
  return RoundHalfUp(RoundHalfUp(utility, 2) / RoundHalfUp(cost, 2), 1);
}

Feasibility ClassifyLatency(const LatencyProfile& latency, const ScenarioContext& ctx) {
  if (latency.mode == LatencyMode::kOfflineOnly || !latency.estimate_ms) {
    return Feasibility::kInfeasibleOnline;
  }
  const double budget = ctx.ExplanationBudgetMs();
  const double estimate = *latency.estimate_ms;
  if (estimate <= ctx.fit_fraction * budget + kScoreTolerance) return Feasibility::kFits;
  if (estimate <= budget + kScoreTolerance) return Feasibility::kMarginal;
  return Feasibility::kInfeasibleOnline;
}

bool Dominates(const AxisTriple& a, const AxisTriple& b) {
  const bool weakly = a.c >= b.c && a.u >= b.u && a.d >= b.d;
  const bool strictly = a.c > b.c || a.u > b.u || a.d > b.d;
  return weakly && strictly;
}

std::set<std::string> ParetoFrontier(std::span<const FrontierPoint> points) {
  if (points.empty()) throw DomainError("Pareto frontier of an empty set is undefined");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (LexGreater(points[a].adjusted, points[b].adjusted)) return true;
    if (LexGreater(points[b].adjusted, points[a].adjusted)) return false;
    return points[a].technique_id < points[b].technique_id;
  });
  std::set<std::string> ids;
  for (const auto& p : points) {
    if (!ids.insert(p.technique_id).second) {
      throw DomainError("duplicate technique id in frontier input: " + p.technique_id);
    }
  }

  // A dominator is lexicographically greater than what it dominates, so it
  // is visited first; dominance is transitive, so checking against the kept
  // (non-dominated) points suffices.
  std::vector<std::size_t> kept;
  std::set<std::string> frontier;
  for (std::size_t idx : order) {
    const AxisTriple& p = points[idx].adjusted;
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return Dominates(points[k].adjusted, p);
    });
    if (!dominated) {
      kept.push_back(idx);
      frontier.insert(points[idx].technique_id);
    }
  }
  return frontier;
}

std::vector<SelectionResult> Select(const Catalog& catalog,
                                    std::span<const EssCoordinates> scores,
                                    const ScenarioContext& ctx, RatioMode mode) {
  std::vector<SelectionResult> results;
  std::vector<FrontierPoint> points;
  results.reserve(scores.size());
  for (const auto& s : scores) {
    const Technique* t = FindTechnique(catalog, s.technique_id);
    if (t == nullptr) throw DomainError("no catalog entry for scored technique " + s.technique_id);
    SelectionResult r;
    r.technique_id = s.technique_id;
    r.adjusted = s.adjusted;
    r.efficiency_rating = t->properties.efficiency;
    r.utility = Utility(s.adjusted, ctx.selection_weights);
    r.resource_cost = ResourceCost(t->properties.efficiency);
    r.efficiency_ratio = EfficiencyRatio(r.utility, r.resource_cost, mode);
    r.feasibility = ClassifyLatency(t->latency, ctx);
    results.push_back(std::move(r));
    points.push_back({s.technique_id, s.adjusted});
  }
  if (!points.empty()) {
    const auto frontier = ParetoFrontier(points);
    for (auto& r : results) r.on_pareto_frontier = frontier.contains(r.technique_id);
  }
  return results;
}

std::vector<SelectionResult> Rank(std::span<const SelectionResult> results, RankKey key) {
  std::vector<SelectionResult> out(results.begin(), results.end());
  std::stable_sort(out.begin(), out.end(), [key](const SelectionResult& a, const SelectionResult& b) {
    const double ka = KeyOf(a, key);
    const double kb = KeyOf(b, key);
    if (ka != kb) return ka > kb;
    if (a.utility != b.utility) return a.utility > b.utility;
    return a.technique_id < b.technique_id;
  });
  return out;
}

std::vector<std::string> RankedIds(std::span<const SelectionResult> results, RankKey key) {
  std::vector<std::string> ids;
  for (const auto& r : Rank(results, key)) ids.push_back(r.technique_id);
  return ids;
}

}  // namespace ess
