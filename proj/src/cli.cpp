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

#include "ess/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "ess/catalog.hpp"
#include "ess/pipeline.hpp"
#include "ess/report.hpp"
#include "ess/scoring.hpp"
#include "ess/sensitivity.hpp"

namespace ess::cli {
namespace {

struct InvocationConfig {
  std::string catalog = "builtin";
  std::string scenario = "substitution";
  std::string modality = "tabular";
  std::string rounding = "full";
  std::string format = "table";
  std::string out_path;
  bool provenance = false;
  bool timestamps = false;

  // recommend overrides
  std::optional<double> budget_ms;
  std::optional<double> reserved_ms;
  std::optional<double> fit_fraction;

  // sweep
  std::string param = "gamma_c";
  double from = 1.0;
  double to = 1.0;
  double step = 0.05;

  RatioMode Mode() const {
    return rounding == "paper" ? RatioMode::kPaperRounded : RatioMode::kFullPrecision;
  }
  OutputFormat Format() const { return ParseOutputFormat(format).value_or(OutputFormat::kTable); }
};

// Usage problems detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

void AddShared(CLI::App* sub, InvocationConfig& cfg) {
  sub->add_option("--catalog", cfg.catalog, "Catalog file, or \"builtin\"")->capture_default_str();
  sub->add_option("--scenario", cfg.scenario, "Scenario file, or \"substitution\"")
      ->capture_default_str();
  sub->add_option("--modality", cfg.modality, "Data modality filter")->capture_default_str();
  sub->add_option("--rounding", cfg.rounding, "Efficiency ratio rounding")
      ->check(CLI::IsMember({"paper", "full"}))
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "machine"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out_path, "Write the document here instead of stdout");
  sub->add_flag("--provenance", cfg.provenance, "Append the provenance trail (table/csv)");
  sub->add_flag("--timestamps", cfg.timestamps, "Stamp the provenance trail with the current time");
}

Catalog LoadCatalogArg(const std::string& arg) {
  return arg == "builtin" ? BuiltinPaperCatalog() : LoadCatalogFile(arg);
}

ScenarioContext LoadScenarioArg(const std::string& arg) {
  return arg == "substitution" ? SubstitutionScenario() : LoadScenarioFile(arg);
}

std::string UtcNow() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool UseStyling(const std::ostream& out, const InvocationConfig& cfg) {
  return &out == &std::cout && cfg.out_path.empty() && cfg.Format() == OutputFormat::kTable &&
         std::getenv("ESS_NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO) == 1;
}

// Bold first line (the table header) for interactive terminals.
std::string Style(std::string doc) {
  const auto eol = doc.find('\n');
  if (eol == std::string::npos) return doc;
  return "\x1b[1m" + doc.substr(0, eol) + "\x1b[0m" + doc.substr(eol);
}

void Emit(const std::string& doc, const InvocationConfig& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << (UseStyling(out, cfg) ? Style(doc) : doc);
    out.flush();
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write " + cfg.out_path);
  file << doc;
  if (!file) throw IoError("error while writing " + cfg.out_path);
}

Evaluation RunPipeline(const InvocationConfig& cfg, const ScenarioContext& scenario) {
  EvaluationOptions opts;
  opts.modality = cfg.modality;
  opts.ratio_mode = cfg.Mode();
  Evaluation ev = Evaluate(LoadCatalogArg(cfg.catalog), scenario, opts);
  if (cfg.timestamps) ev.provenance.generated_at = UtcNow();
  return ev;
}

std::string WithProvenance(std::string doc, const Evaluation& ev, const InvocationConfig& cfg) {
  if (!cfg.provenance || cfg.Format() == OutputFormat::kMachine) return doc;
  return doc + "\n" + RenderProvenance(ev.provenance, cfg.Format());
}

int CmdValidate(const InvocationConfig& cfg, std::ostream& out) {
  int status = kExitOk;
  auto report = [&](const char* what, const auto& load) {
    try {
      out << what << " OK: " << load() << "\n";
    } catch (const ValidationError& e) {
      out << what << " INVALID\n";
      for (const auto& f : e.findings()) out << "  " << f.ToString() << "\n";
      status = std::max(status, kExitDomain);
    }
  };
  report("catalog", [&] {
    const Catalog c = LoadCatalogArg(cfg.catalog);
    ValidateCatalog(c);
    return std::to_string(c.size()) + " technique(s), " +
           std::to_string(FilterApplicable(c, cfg.modality).size()) + " applicable to " + cfg.modality;
  });
  report("scenario", [&] {
    const ScenarioContext s = LoadScenarioArg(cfg.scenario);
    s.Validate();
    return s.name;
  });
  return status;
}

int CmdScore(const InvocationConfig& cfg, std::ostream& out) {
  const Evaluation ev = RunPipeline(cfg, LoadScenarioArg(cfg.scenario));
  const std::string doc = cfg.Format() == OutputFormat::kMachine
                              ? RenderMachineDocument(ev)
                              : RenderScores(ev.scores, ev.catalog, cfg.Format());
  Emit(WithProvenance(doc, ev, cfg), cfg, out);
  return kExitOk;
}

int CmdSelect(const InvocationConfig& cfg, std::ostream& out) {
  const Evaluation ev = RunPipeline(cfg, LoadScenarioArg(cfg.scenario));
  const std::string doc = cfg.Format() == OutputFormat::kMachine
                              ? RenderMachineDocument(ev)
                              : RenderSelection(ev.selection, ev.catalog, ev.ratio_mode, cfg.Format());
  Emit(WithProvenance(doc, ev, cfg), cfg, out);
  return kExitOk;
}

int CmdRecommend(const InvocationConfig& cfg, std::ostream& out) {
  ScenarioContext scenario = LoadScenarioArg(cfg.scenario);
  if (cfg.budget_ms) scenario.latency_budget_ms = *cfg.budget_ms;
  if (cfg.reserved_ms) scenario.reserved_overhead_ms = *cfg.reserved_ms;
  if (cfg.fit_fraction) scenario.fit_fraction = *cfg.fit_fraction;
  const Evaluation ev = RunPipeline(cfg, scenario);
  const std::string doc = cfg.Format() == OutputFormat::kMachine
                              ? RenderMachineDocument(ev)
                              : RenderPlan(ev.plan, ev.catalog, cfg.Format());
  Emit(WithProvenance(doc, ev, cfg), cfg, out);
  return kExitOk;
}

int CmdSweep(const InvocationConfig& cfg, std::ostream& out) {
  const auto param = ParseSweepParameter(cfg.param);
  if (!param) throw UsageError("unknown sweep parameter \"" + cfg.param + "\"");
  SweepSpec spec{*param, cfg.from, cfg.to, cfg.step};
  try {
    spec.Validate();
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  const Catalog catalog = LoadCatalogArg(cfg.catalog);
  ValidateCatalog(catalog);
  if (FilterApplicable(catalog, cfg.modality).empty()) {
    throw DomainError("no applicable techniques for modality \"" + cfg.modality + "\"");
  }
  const ScenarioContext scenario = LoadScenarioArg(cfg.scenario);
  scenario.Validate();
  const SweepReport report = Sweep(catalog, scenario, spec, cfg.Mode(), cfg.modality);
  Emit(RenderSweep(report, cfg.Format()), cfg, out);
  return kExitOk;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and recommend explainability techniques for a deployment scenario", "ess"};
  app.require_subcommand(1);
  InvocationConfig cfg;

  CLI::App* validate = app.add_subcommand("validate", "Load and validate a catalog and scenario");
  CLI::App* score = app.add_subcommand("score", "Adjusted axis scores and qualitative levels");
  CLI::App* select = app.add_subcommand("select", "Utility, cost, efficiency ratio and latency fit");
  CLI::App* recommend = app.add_subcommand("recommend", "Three-tier hybrid deployment plan");
  CLI::App* sweep = app.add_subcommand("sweep", "One-parameter sensitivity sweep");
  for (CLI::App* sub : {validate, score, select, recommend, sweep}) AddShared(sub, cfg);

  recommend->add_option("--budget-ms", cfg.budget_ms, "End-to-end latency budget override");
  recommend->add_option("--reserved-ms", cfg.reserved_ms, "Reserved non-explanation overhead override");
  recommend->add_option("--fit-fraction", cfg.fit_fraction, "Fit fraction override");

  sweep->add_option("--param", cfg.param, "gamma_c|gamma_u|gamma_d|weight_c|weight_u|weight_d|fit_fraction")
      ->capture_default_str();
  sweep->add_option("--from", cfg.from, "First grid value")->required();
  sweep->add_option("--to", cfg.to, "Last grid value")->required();
  sweep->add_option("--step", cfg.step, "Grid step (> 0)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return CmdValidate(cfg, out);
    if (score->parsed()) return CmdScore(cfg, out);
    if (select->parsed()) return CmdSelect(cfg, out);
    if (recommend->parsed()) return CmdRecommend(cfg, out);
    if (sweep->parsed()) return CmdSweep(cfg, out);
  } catch (const UsageError& e) {
    err << "ess: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "ess: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "ess: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "ess: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "ess: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace ess::cli
