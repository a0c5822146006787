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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ess/catalog.hpp"
#include "ess/pipeline.hpp"
#include "ess/recommendation.hpp"
#include "ess/report.hpp"
#include "ess/scoring.hpp"
#include "ess/selection.hpp"
#include "ess/sensitivity.hpp"

namespace py = pybind11;

namespace {

ess::OutputFormat FormatArg(const std::string& name) {
  auto f = ess::ParseOutputFormat(name);
  if (!f) throw py::value_error("format must be table, csv or machine");
  return *f;
}

ess::RatioMode ModeArg(const std::string& name) {
  if (name == "full") return ess::RatioMode::kFullPrecision;
  if (name == "paper") return ess::RatioMode::kPaperRounded;
  throw py::value_error("rounding must be full or paper");
}

}  // namespace

PYBIND11_MODULE(_ess, m) {
  m.doc() = "Explainability technique scoring, selection and recommendation engine";
  m.attr("__version__") = std::string(ess::kEngineVersion);

  auto& base = py::register_exception<ess::Error>(m, "EssError");
  py::register_exception<ess::ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ess::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ess::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ess::IoError>(m, "IoError", base.ptr());

  py::class_<ess::PropertyVector>(m, "PropertyVector")
      .def(py::init<>())
      .def(py::init([](double a, double t, double c, double ac, double f, double d, double e) {
             return ess::PropertyVector{a, t, c, ac, f, d, e};
           }),
           py::arg("auditability"), py::arg("traceability"), py::arg("comprehensibility"),
           py::arg("actionability"), py::arg("fidelity"), py::arg("debuggability"),
           py::arg("efficiency"))
      .def_readwrite("auditability", &ess::PropertyVector::auditability)
      .def_readwrite("traceability", &ess::PropertyVector::traceability)
      .def_readwrite("comprehensibility", &ess::PropertyVector::comprehensibility)
      .def_readwrite("actionability", &ess::PropertyVector::actionability)
      .def_readwrite("fidelity", &ess::PropertyVector::fidelity)
      .def_readwrite("debuggability", &ess::PropertyVector::debuggability)
      .def_readwrite("efficiency", &ess::PropertyVector::efficiency)
      .def("as_tuple",
           [](const ess::PropertyVector& p) {
             return py::make_tuple(p.auditability, p.traceability, p.comprehensibility,
                                   p.actionability, p.fidelity, p.debuggability, p.efficiency);
           })
      .def(py::self == py::self);

  py::enum_<ess::LatencyMode>(m, "LatencyMode")
      .value("ONLINE", ess::LatencyMode::kOnline)
      .value("OFFLINE_ONLY", ess::LatencyMode::kOfflineOnly);

  py::class_<ess::LatencyProfile>(m, "LatencyProfile")
      .def_static("online", &ess::LatencyProfile::Online, py::arg("estimate_ms"))
      .def_static("offline_only", &ess::LatencyProfile::OfflineOnly)
      .def_readwrite("mode", &ess::LatencyProfile::mode)
      .def_readwrite("estimate_ms", &ess::LatencyProfile::estimate_ms);

  py::class_<ess::Technique>(m, "Technique")
      .def(py::init<>())
      .def_readwrite("id", &ess::Technique::id)
      .def_readwrite("name", &ess::Technique::name)
      .def_readwrite("family", &ess::Technique::family)
      .def_readwrite("modalities", &ess::Technique::modalities)
      .def_readwrite("properties", &ess::Technique::properties)
      .def_readwrite("latency", &ess::Technique::latency)
      .def_readwrite("notes", &ess::Technique::notes)
      .def("__repr__", [](const ess::Technique& t) { return "<Technique " + t.id + ">"; });

  py::class_<ess::AxisWeights>(m, "AxisWeights")
      .def(py::init<>())
      .def_readwrite("audit", &ess::AxisWeights::audit)
      .def_readwrite("trace", &ess::AxisWeights::trace)
      .def_readwrite("compr", &ess::AxisWeights::compr)
      .def_readwrite("action", &ess::AxisWeights::action)
      .def_readwrite("fidelity", &ess::AxisWeights::fidelity)
      .def_readwrite("debug", &ess::AxisWeights::debug)
      .def_readwrite("eff", &ess::AxisWeights::eff);

  py::class_<ess::AxisTriple>(m, "AxisTriple")
      .def(py::init<>())
      .def(py::init([](double c, double u, double d) { return ess::AxisTriple{c, u, d}; }),
           py::arg("c"), py::arg("u"), py::arg("d"))
      .def_readwrite("c", &ess::AxisTriple::c)
      .def_readwrite("u", &ess::AxisTriple::u)
      .def_readwrite("d", &ess::AxisTriple::d)
      .def("as_tuple", [](const ess::AxisTriple& t) { return py::make_tuple(t.c, t.u, t.d); });

  py::class_<ess::SelectionWeights>(m, "SelectionWeights")
      .def(py::init<>())
      .def(py::init([](double c, double u, double d) { return ess::SelectionWeights{c, u, d}; }),
           py::arg("c"), py::arg("u"), py::arg("d"))
      .def_readwrite("c", &ess::SelectionWeights::c)
      .def_readwrite("u", &ess::SelectionWeights::u)
      .def_readwrite("d", &ess::SelectionWeights::d);

  py::class_<ess::ScenarioContext>(m, "ScenarioContext")
      .def(py::init<>())
      .def_readwrite("name", &ess::ScenarioContext::name)
      .def_readwrite("gamma_c", &ess::ScenarioContext::gamma_c)
      .def_readwrite("gamma_u", &ess::ScenarioContext::gamma_u)
      .def_readwrite("gamma_d", &ess::ScenarioContext::gamma_d)
      .def_readwrite("latency_budget_ms", &ess::ScenarioContext::latency_budget_ms)
      .def_readwrite("reserved_overhead_ms", &ess::ScenarioContext::reserved_overhead_ms)
      .def_readwrite("fit_fraction", &ess::ScenarioContext::fit_fraction)
      .def_readwrite("selection_weights", &ess::ScenarioContext::selection_weights)
      .def_readwrite("axis_weights", &ess::ScenarioContext::axis_weights)
      .def("validate", &ess::ScenarioContext::Validate);

  py::enum_<ess::Level>(m, "Level")
      .value("LOW", ess::Level::kLow)
      .value("MEDIUM", ess::Level::kMedium)
      .value("HIGH", ess::Level::kHigh);

  py::class_<ess::EssCoordinates>(m, "EssCoordinates")
      .def_readonly("technique_id", &ess::EssCoordinates::technique_id)
      .def_readonly("raw", &ess::EssCoordinates::raw)
      .def_readonly("adjusted", &ess::EssCoordinates::adjusted)
      .def_readonly("levels", &ess::EssCoordinates::levels);

  py::enum_<ess::Feasibility>(m, "Feasibility")
      .value("INFEASIBLE_ONLINE", ess::Feasibility::kInfeasibleOnline)
      .value("MARGINAL", ess::Feasibility::kMarginal)
      .value("FITS", ess::Feasibility::kFits);

  py::enum_<ess::RatioMode>(m, "RatioMode")
      .value("FULL_PRECISION", ess::RatioMode::kFullPrecision)
      .value("PAPER_ROUNDED", ess::RatioMode::kPaperRounded);

  py::enum_<ess::RankKey>(m, "RankKey")
      .value("UTILITY", ess::RankKey::kUtility)
      .value("RATIO", ess::RankKey::kRatio)
      .value("AXIS_C", ess::RankKey::kAxisC)
      .value("AXIS_U", ess::RankKey::kAxisU)
      .value("AXIS_D", ess::RankKey::kAxisD);

  py::class_<ess::SelectionResult>(m, "SelectionResult")
      .def_readonly("technique_id", &ess::SelectionResult::technique_id)
      .def_readonly("adjusted", &ess::SelectionResult::adjusted)
      .def_readonly("efficiency_rating", &ess::SelectionResult::efficiency_rating)
      .def_readonly("utility", &ess::SelectionResult::utility)
      .def_readonly("resource_cost", &ess::SelectionResult::resource_cost)
      .def_readonly("efficiency_ratio", &ess::SelectionResult::efficiency_ratio)
      .def_readonly("feasibility", &ess::SelectionResult::feasibility)
      .def_readonly("on_pareto_frontier", &ess::SelectionResult::on_pareto_frontier);

  py::class_<ess::TierPick>(m, "TierPick")
      .def_readonly("technique_id", &ess::TierPick::technique_id)
      .def_readonly("evidence_key", &ess::TierPick::evidence_key)
      .def_readonly("evidence_value", &ess::TierPick::evidence_value)
      .def_readonly("utility", &ess::TierPick::utility)
      .def_readonly("feasibility", &ess::TierPick::feasibility);

  py::class_<ess::TierPlan>(m, "TierPlan")
      .def_readonly("tier1_always_on", &ess::TierPlan::tier1_always_on)
      .def_readonly("tier2_selective", &ess::TierPlan::tier2_selective)
      .def_readonly("tier3_periodic", &ess::TierPlan::tier3_periodic)
      .def_readonly("warnings", &ess::TierPlan::warnings);

  py::class_<ess::Evaluation>(m, "Evaluation")
      .def_readonly("catalog", &ess::Evaluation::catalog)
      .def_readonly("scenario", &ess::Evaluation::scenario)
      .def_readonly("scores", &ess::Evaluation::scores)
      .def_readonly("selection", &ess::Evaluation::selection)
      .def_readonly("plan", &ess::Evaluation::plan)
      .def("to_json", &ess::RenderMachineDocument);

  py::enum_<ess::SweepParameter>(m, "SweepParameter")
      .value("GAMMA_C", ess::SweepParameter::kGammaC)
      .value("GAMMA_U", ess::SweepParameter::kGammaU)
      .value("GAMMA_D", ess::SweepParameter::kGammaD)
      .value("WEIGHT_C", ess::SweepParameter::kSelectionWeightC)
      .value("WEIGHT_U", ess::SweepParameter::kSelectionWeightU)
      .value("WEIGHT_D", ess::SweepParameter::kSelectionWeightD)
      .value("FIT_FRACTION", ess::SweepParameter::kFitFraction);

  py::class_<ess::SweepSpec>(m, "SweepSpec")
      .def(py::init([](ess::SweepParameter p, double from, double to, double step) {
             return ess::SweepSpec{p, from, to, step};
           }),
           py::arg("parameter"), py::arg("start"), py::arg("stop"), py::arg("step"))
      .def("grid", &ess::SweepSpec::Grid);

  py::class_<ess::SweepPoint>(m, "SweepPoint")
      .def_readonly("value", &ess::SweepPoint::value)
      .def_readonly("valid", &ess::SweepPoint::valid)
      .def_readonly("error", &ess::SweepPoint::error)
      .def_readonly("ranking_by_ratio", &ess::SweepPoint::ranking_by_ratio)
      .def_readonly("ranking_by_utility", &ess::SweepPoint::ranking_by_utility)
      .def_readonly("plan", &ess::SweepPoint::plan);

  py::class_<ess::SweepReport>(m, "SweepReport")
      .def_readonly("points", &ess::SweepReport::points)
      .def_readonly("stability", &ess::SweepReport::stability)
      .def_readonly("change_points", &ess::SweepReport::change_points);

  // Catalog
  m.def("builtin_paper_catalog", &ess::BuiltinPaperCatalog);
  m.def("load_catalog", &ess::LoadCatalog, py::arg("document"));
  m.def("load_catalog_file", [](const std::string& p) { return ess::LoadCatalogFile(p); }, py::arg("path"));
  m.def("filter_applicable", &ess::FilterApplicable, py::arg("catalog"), py::arg("modality"));
  m.def("render_catalog", &ess::RenderCatalog, py::arg("catalog"));

  // Scoring
  m.def("substitution_scenario", &ess::SubstitutionScenario);
  m.def("load_scenario", &ess::LoadScenario, py::arg("document"));
  m.def("aggregate_axes", &ess::AggregateAxes, py::arg("properties"), py::arg("weights") = ess::AxisWeights{});
  m.def("apply_context", &ess::ApplyContext, py::arg("raw"), py::arg("scenario"));
  m.def("discretise", &ess::Discretise, py::arg("score"));
  m.def("score_technique", &ess::ScoreTechnique, py::arg("technique"), py::arg("weights"), py::arg("scenario"));

  // Selection
  m.def("utility", &ess::Utility, py::arg("adjusted"), py::arg("weights"));
  m.def("resource_cost", &ess::ResourceCost, py::arg("efficiency"));
  m.def("efficiency_ratio",
        [](double u, double cost, const std::string& rounding) {
          return ess::EfficiencyRatio(u, cost, ModeArg(rounding));
        },
        py::arg("utility"), py::arg("cost"), py::arg("rounding") = "full");
  m.def("classify_latency", &ess::ClassifyLatency, py::arg("latency"), py::arg("scenario"));
  m.def("pareto_frontier",
        [](const std::vector<std::pair<std::string, ess::AxisTriple>>& points) {
          std::vector<ess::FrontierPoint> fp;
          for (const auto& [id, t] : points) fp.push_back({id, t});
          return ess::ParetoFrontier(fp);
        },
        py::arg("points"));
  m.def("rank", &ess::RankedIds, py::arg("results"), py::arg("key"));

  // Recommendation and sensitivity
  m.def("synthesize_tiers", &ess::SynthesizeTiers, py::arg("scores"), py::arg("selection"));
  m.def("sweep",
        [](const ess::Catalog& c, const ess::ScenarioContext& ctx, const ess::SweepSpec& spec,
           const std::string& rounding, const std::string& modality) {
          py::gil_scoped_release release;
          return ess::Sweep(c, ctx, spec, ModeArg(rounding), modality);
        },
        py::arg("catalog"), py::arg("scenario"), py::arg("spec"), py::arg("rounding") = "full",
        py::arg("modality") = "tabular");
  m.def(
      "rank_stability",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) { return ess::RankStability(a, b); },
      py::arg("ranking_a"), py::arg("ranking_b"));

  // Whole pipeline and rendering
  m.def("evaluate",
        [](const ess::Catalog& c, const ess::ScenarioContext& ctx, const std::string& modality,
           const std::string& rounding) {
          ess::EvaluationOptions opts;
          opts.modality = modality;
          opts.ratio_mode = ModeArg(rounding);
          return ess::Evaluate(c, ctx, opts);
        },
        py::arg("catalog"), py::arg("scenario"), py::arg("modality") = "tabular",
        py::arg("rounding") = "full");
  m.def("render_scores",
        [](const ess::Evaluation& ev, const std::string& format) {
          return ess::RenderScores(ev.scores, ev.catalog, FormatArg(format));
        },
        py::arg("evaluation"), py::arg("format") = "table");
  m.def("render_selection",
        [](const ess::Evaluation& ev, const std::string& format) {
          return ess::RenderSelection(ev.selection, ev.catalog, ev.ratio_mode, FormatArg(format));
        },
        py::arg("evaluation"), py::arg("format") = "table");
  m.def("render_plan",
        [](const ess::Evaluation& ev, const std::string& format) {
          return ess::RenderPlan(ev.plan, ev.catalog, FormatArg(format));
        },
        py::arg("evaluation"), py::arg("format") = "table");
  m.def("render_provenance",
        [](const ess::Evaluation& ev, const std::string& format) {
          return ess::RenderProvenance(ev.provenance, FormatArg(format));
        },
        py::arg("evaluation"), py::arg("format") = "machine");
  m.def("render_sweep",
        [](const ess::SweepReport& r, const std::string& format) {
          return ess::RenderSweep(r, FormatArg(format));
        },
        py::arg("report"), py::arg("format") = "table");
}
