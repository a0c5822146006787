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

#include "ess/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "ess/pipeline.hpp"

namespace ess {
namespace {

constexpr std::size_t kMaxGridPoints = 100000;

// Snaps accumulated step error (1.0 + 3 * 0.05 = 1.1500000000000001) back to
// the nearest short decimal.
double Tidy(double v) {
  if (std::abs(v) >= 1e6) return v;
  return std::round(v * 1e12) / 1e12;
}

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

bool SameAssignments(const std::optional<TierPlan>& a, const std::optional<TierPlan>& b) {
  if (!a || !b) return a.has_value() == b.has_value();
  auto id = [](const std::optional<TierPick>& p) { return p ? p->technique_id : std::string(); };
  return id(a->tier1_always_on) == id(b->tier1_always_on) &&
         id(a->tier2_selective) == id(b->tier2_selective) &&
         id(a->tier3_periodic) == id(b->tier3_periodic);
}

SweepPoint EvaluatePoint(const Catalog& catalog, const ScenarioContext& base, SweepParameter param,
                         double value, RatioMode mode, std::string_view modality) {
  SweepPoint point;
  point.value = value;
  const ScenarioContext ctx = WithParameter(base, param, value);
  if (auto findings = ctx.Check(); !findings.empty()) {
    point.valid = false;
    point.error = findings.front().ToString();
    return point;
  }
  try {
    EvaluationOptions opts;
    opts.modality = std::string(modality);
    opts.ratio_mode = mode;
    opts.record_provenance = false;
    const Evaluation ev = Evaluate(catalog, ctx, opts);
    point.ranking_by_ratio = RankedIds(ev.selection, RankKey::kRatio);
    point.ranking_by_utility = RankedIds(ev.selection, RankKey::kUtility);
    point.plan = ev.plan;
  } catch (const Error& e) {
    point.valid = false;
    point.error = e.what();
  }
  return point;
}

}  // namespace

std::string_view SweepParameterName(SweepParameter p) {
  switch (p) {
    case SweepParameter::kGammaC: return "gamma_c";
    case SweepParameter::kGammaU: return "gamma_u";
    case SweepParameter::kGammaD: return "gamma_d";
    case SweepParameter::kSelectionWeightC: return "weight_c";
    case SweepParameter::kSelectionWeightU: return "weight_u";
    case SweepParameter::kSelectionWeightD: return "weight_d";
    case SweepParameter::kFitFraction: return "fit_fraction";
  }
  return "?";
}

std::optional<SweepParameter> ParseSweepParameter(std::string_view name) {
  for (auto p : {SweepParameter::kGammaC, SweepParameter::kGammaU, SweepParameter::kGammaD,
                 SweepParameter::kSelectionWeightC, SweepParameter::kSelectionWeightU,
                 SweepParameter::kSelectionWeightD, SweepParameter::kFitFraction}) {
    if (SweepParameterName(p) == name) return p;
  }
  return std::nullopt;
}

void SweepSpec::Validate() const {
  std::vector<ValidationFinding> findings;
  const std::string subject = "sweep:" + std::string(SweepParameterName(parameter));
  if (!std::isfinite(from)) findings.push_back({subject, "from", "must be finite"});
  if (!std::isfinite(to)) findings.push_back({subject, "to", "must be finite"});
  if (!std::isfinite(step) || step <= 0.0) findings.push_back({subject, "step", "must be > 0"});
  if (findings.empty() && from > to) findings.push_back({subject, "from", "must not exceed to"});
  if (findings.empty() && (to - from) / step >= static_cast<double>(kMaxGridPoints)) {
    findings.push_back({subject, "step", "grid would exceed " + std::to_string(kMaxGridPoints) + " points"});
  }
  if (!findings.empty()) throw ValidationError(std::move(findings));
}

std::vector<double> SweepSpec::Grid() const {
  Validate();
  const auto steps = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 2);
  for (std::size_t i = 0; i <= steps; ++i) grid.push_back(Tidy(from + static_cast<double>(i) * step));
  if (grid.back() < to - 1e-9) {
    grid.push_back(to);
  } else {
    grid.back() = std::min(grid.back(), to);
    if (std::abs(grid.back() - to) <= 1e-9) grid.back() = to;
  }
  return grid;
}

ScenarioContext WithParameter(const ScenarioContext& base, SweepParameter p, double value) {
  ScenarioContext ctx = base;
  auto reweight = [&](double SelectionWeights::*target) {
    SelectionWeights& w = ctx.selection_weights;
    double SelectionWeights::*all[] = {&SelectionWeights::c, &SelectionWeights::u,
                                       &SelectionWeights::d};
    const double rest = 1.0 - w.*target;
    for (auto m : all) {
      if (m == target) continue;
      w.*m = rest > 0.0 ? w.*m * (1.0 - value) / rest : (1.0 - value) / 2.0;
    }
    w.*target = value;
  };
  switch (p) {
    case SweepParameter::kGammaC: ctx.gamma_c = value; break;
    case SweepParameter::kGammaU: ctx.gamma_u = value; break;
    case SweepParameter::kGammaD: ctx.gamma_d = value; break;
    case SweepParameter::kSelectionWeightC: reweight(&SelectionWeights::c); break;
    case SweepParameter::kSelectionWeightU: reweight(&SelectionWeights::u); break;
    case SweepParameter::kSelectionWeightD: reweight(&SelectionWeights::d); break;
    case SweepParameter::kFitFraction: ctx.fit_fraction = value; break;
  }
  return ctx;
}

SweepReport Sweep(const Catalog& catalog, const ScenarioContext& ctx, const SweepSpec& spec,
                  RatioMode mode, std::string_view modality) {
  const std::vector<double> grid = spec.Grid();
  SweepReport report;
  report.parameter = spec.parameter;
  report.ratio_mode = mode;
  report.points.resize(grid.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      report.points[i] = EvaluatePoint(catalog, ctx, spec.parameter, grid[i], mode, modality);
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(grid.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  const SweepPoint* previous_valid = nullptr;
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const SweepPoint& point = report.points[i];
    if (i > 0) {
      const SweepPoint& prev = report.points[i - 1];
      if (prev.valid && point.valid && point.ranking_by_ratio.size() >= 2) {
        report.stability.push_back(RankStability(prev.ranking_by_ratio, point.ranking_by_ratio));
      } else {
        report.stability.push_back(std::nullopt);
      }
    }
    if (!point.valid) continue;
    if (previous_valid && !SameAssignments(previous_valid->plan, point.plan)) {
      report.change_points.push_back(point.value);
    }
    previous_valid = &point;
  }
  return report;
}

double KendallTauB(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("Kendall tau-b needs paired samples");
  const std::size_t n = x.size();
  long long score = 0;
  long long ties_x = 0;
  long long ties_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = Sign(x[i] - x[j]);
      const int sy = Sign(y[i] - y[j]);
      score += sx * sy;
      ties_x += sx == 0;
      ties_y += sy == 0;
    }
  }
  const auto pairs = static_cast<long long>(n * (n - 1) / 2);
  const double denom = std::sqrt(static_cast<double>(pairs - ties_x) *
                                 static_cast<double>(pairs - ties_y));
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(score) / denom;
}

double RankStability(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() < 2) throw DomainError("rank stability needs at least two ranked ids");
  if (a.size() != b.size()) throw DomainError("rankings cover different id sets");
  std::map<std::string, double> pos_b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!pos_b.emplace(b[i], static_cast<double>(i)).second) {
      throw DomainError("duplicate id in ranking: " + b[i]);
    }
  }
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = pos_b.find(a[i]);
    if (it == pos_b.end()) throw DomainError("rankings cover different id sets: " + a[i]);
    x.push_back(static_cast<double>(i));
    y.push_back(it->second);
  }
  if (std::set<double>(y.begin(), y.end()).size() != y.size()) {
    throw DomainError("duplicate id in ranking");
  }
  return KendallTauB(x, y);
}

}  // namespace ess
