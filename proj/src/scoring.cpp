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

#include "ess/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "ess/numeric.hpp"

namespace ess {
namespace {

using nlohmann::json;

constexpr double kLowMediumEdge = 2.5;
constexpr double kMediumHighEdge = 3.5;

void CheckGroup(std::string_view subject, std::string_view group,
                std::initializer_list<std::pair<const char*, double>> weights,
                std::vector<ValidationFinding>& findings) {
  double sum = 0.0;
  bool finite = true;
  for (const auto& [name, w] : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      findings.push_back({std::string(subject), std::string(group) + "." + name,
                          "weight must be a non-negative number"});
      finite = false;
    }
    sum += w;
  }
  if (finite && std::abs(sum - 1.0) > kWeightSumTolerance) {
    findings.push_back({std::string(subject), std::string(group), "weights must sum to 1"});
  }
}

double Clip(double v) { return std::clamp(v, kMinRating, kMaxRating); }

// Strict field reader for scenario documents; records findings instead of
// throwing so that all problems are reported together.
class ScenarioReader {
 public:
  ScenarioReader(const json& doc, std::vector<ValidationFinding>& findings)
      : doc_(doc), findings_(findings) {
    auto it = doc_.find("name");
    subject_ = "scenario:" + (it != doc_.end() && it->is_string() ? it->get<std::string>()
                                                                  : std::string("?"));
  }

  ScenarioContext Read() {
    static constexpr std::string_view kKeys[] = {
        "name",         "gamma_c",           "gamma_u",      "gamma_d",          "latency_budget_ms",
        "reserved_overhead_ms", "fit_fraction", "selection_weights", "axis_weights"};
    for (const auto& [key, value] : doc_.items()) {
      if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
        Fail(key, "unknown field");
      }
    }
    ScenarioContext ctx;
    if (auto it = doc_.find("name"); it != doc_.end() && it->is_string()) {
      ctx.name = it->get<std::string>();
    } else {
      Fail("name", "missing or not a string");
    }
    ctx.gamma_c = Number(doc_, "gamma_c", "gamma_c");
    ctx.gamma_u = Number(doc_, "gamma_u", "gamma_u");
    ctx.gamma_d = Number(doc_, "gamma_d", "gamma_d");
    ctx.latency_budget_ms = Number(doc_, "latency_budget_ms", "latency_budget_ms");
    ctx.reserved_overhead_ms = Number(doc_, "reserved_overhead_ms", "reserved_overhead_ms");
    ctx.fit_fraction = Number(doc_, "fit_fraction", "fit_fraction");
    if (const json* sw = Object(doc_, "selection_weights", "selection_weights")) {
      ctx.selection_weights.c = Number(*sw, "c", "selection_weights.c");
      ctx.selection_weights.u = Number(*sw, "u", "selection_weights.u");
      ctx.selection_weights.d = Number(*sw, "d", "selection_weights.d");
    }
    if (doc_.contains("axis_weights")) {
      const json* aw = Object(doc_, "axis_weights", "axis_weights");
      if (aw) ctx.axis_weights = ReadAxisWeights(*aw);
    }
    return ctx;
  }

 private:
  AxisWeights ReadAxisWeights(const json& aw) {
    AxisWeights w;
    if (const json* c = Object(aw, "compliance", "axis_weights.compliance")) {
      w.audit = Number(*c, "audit", "axis_weights.compliance.audit");
      w.trace = Number(*c, "trace", "axis_weights.compliance.trace");
    }
    if (const json* u = Object(aw, "user", "axis_weights.user")) {
      w.compr = Number(*u, "compr", "axis_weights.user.compr");
      w.action = Number(*u, "action", "axis_weights.user.action");
    }
    if (const json* d = Object(aw, "developer", "axis_weights.developer")) {
      w.fidelity = Number(*d, "fidelity", "axis_weights.developer.fidelity");
      w.debug = Number(*d, "debug", "axis_weights.developer.debug");
      w.eff = Number(*d, "eff", "axis_weights.developer.eff");
    }
    return w;
  }

  void Fail(std::string field, std::string message) {
    findings_.push_back({subject_, std::move(field), std::move(message)});
  }

  double Number(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      Fail(path, "missing required field");
      return 0.0;
    }
    if (!it->is_number()) {
      Fail(path, "must be a number");
      return 0.0;
    }
    return it->get<double>();
  }

  const json* Object(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      Fail(path, "missing required field");
      return nullptr;
    }
    if (!it->is_object()) {
      Fail(path, "must be an object");
      return nullptr;
    }
    return &*it;
  }

  const json& doc_;
  std::vector<ValidationFinding>& findings_;
  std::string subject_;
};

}  // namespace

std::vector<ValidationFinding> AxisWeights::Check(std::string_view subject) const {
  std::vector<ValidationFinding> findings;
  CheckGroup(subject, "axis_weights.compliance", {{"audit", audit}, {"trace", trace}}, findings);
  CheckGroup(subject, "axis_weights.user", {{"compr", compr}, {"action", action}}, findings);
  CheckGroup(subject, "axis_weights.developer",
             {{"fidelity", fidelity}, {"debug", debug}, {"eff", eff}}, findings);
  return findings;
}

std::vector<ValidationFinding> ScenarioContext::Check() const {
  const std::string subject = "scenario:" + name;
  std::vector<ValidationFinding> findings;
  auto fail = [&](const char* field, std::string message) {
    findings.push_back({subject, field, std::move(message)});
  };
  for (auto [field, gamma] : {std::pair{"gamma_c", gamma_c}, std::pair{"gamma_u", gamma_u},
                              std::pair{"gamma_d", gamma_d}}) {
    if (!std::isfinite(gamma) || gamma < 0.0) fail(field, "multiplier must be >= 0");
  }
  if (!std::isfinite(latency_budget_ms) || latency_budget_ms < 0.0) {
    fail("latency_budget_ms", "must be a non-negative number of milliseconds");
  }
  if (!std::isfinite(reserved_overhead_ms) || reserved_overhead_ms < 0.0) {
    fail("reserved_overhead_ms", "must be a non-negative number of milliseconds");
  } else if (!(reserved_overhead_ms < latency_budget_ms)) {
    fail("reserved_overhead_ms", "must be smaller than latency_budget_ms");
  }
  if (!std::isfinite(fit_fraction) || fit_fraction <= 0.0 || fit_fraction > 1.0) {
    fail("fit_fraction", "must lie in (0, 1]");
  }
  CheckGroup(subject, "selection_weights",
             {{"c", selection_weights.c}, {"u", selection_weights.u}, {"d", selection_weights.d}},
             findings);
  if (axis_weights) {
    auto more = axis_weights->Check(subject);
    findings.insert(findings.end(), more.begin(), more.end());
  }
  return findings;
}

void ScenarioContext::Validate() const {
  auto findings = Check();
  if (!findings.empty()) throw ValidationError(std::move(findings));
}

ScenarioContext SubstitutionScenario() { return ScenarioContext{}; }

ScenarioContext LoadScenario(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
  std::vector<ValidationFinding> findings;
  ScenarioContext ctx = ScenarioReader(doc, findings).Read();
  if (findings.empty()) findings = ctx.Check();
  if (!findings.empty()) throw ValidationError(std::move(findings));
  return ctx;
}

ScenarioContext LoadScenarioFile(const std::filesystem::path& path) {
  return LoadScenario(ReadTextFile(path));
}

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kLow: return "Low";
    case Level::kMedium: return "Medium";
    case Level::kHigh: return "High";
  }
  return "?";
}

AxisTriple AggregateAxes(const PropertyVector& p, const AxisWeights& w) {
  return {
      w.audit * p.auditability + w.trace * p.traceability,
      w.compr * p.comprehensibility + w.action * p.actionability,
      w.fidelity * p.fidelity + w.debug * p.debuggability + w.eff * p.efficiency,
  };
}

AxisTriple ApplyContext(const AxisTriple& raw, const ScenarioContext& ctx) {
  return {Clip(ctx.gamma_c * raw.c), Clip(ctx.gamma_u * raw.u), Clip(ctx.gamma_d * raw.d)};
}

Level Discretise(double score) {
  if (score + kScoreTolerance >= kMediumHighEdge) return Level::kHigh;
  if (score + kScoreTolerance >= kLowMediumEdge) return Level::kMedium;
  return Level::kLow;
}

EssCoordinates ScoreTechnique(const Technique& t, const AxisWeights& w,
                              const ScenarioContext& ctx) {
  EssCoordinates out;
  out.technique_id = t.id;
  out.raw = AggregateAxes(t.properties, w);
  out.adjusted = ApplyContext(out.raw, ctx);
  out.levels = {Discretise(out.adjusted.c), Discretise(out.adjusted.u),
                Discretise(out.adjusted.d)};
  return out;
}

std::vector<EssCoordinates> ScoreCatalog(const Catalog& catalog, const ScenarioContext& ctx) {
  const AxisWeights w = ctx.EffectiveAxisWeights();
  std::vector<EssCoordinates> out;
  out.reserve(catalog.size());
  for (const auto& t : catalog) out.push_back(ScoreTechnique(t, w, ctx));
  return out;
}

}  // namespace ess
