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

#include "ess/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace ess {
namespace {

using nlohmann::json;

constexpr std::string_view kTechniqueKeys[] = {"id",         "name",       "family", "modalities",
                                               "properties", "latency", "notes"};

bool IsKnownKey(std::string_view key) {
  return std::find(std::begin(kTechniqueKeys), std::end(kTechniqueKeys), key) !=
         std::end(kTechniqueKeys);
}

std::string FormatNumber(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << v;
  return os.str();
}

template <typename P>
auto& PropertyRef(P& p, std::size_t index) {
  switch (index) {
    case 0: return p.auditability;
    case 1: return p.traceability;
    case 2: return p.comprehensibility;
    case 3: return p.actionability;
    case 4: return p.fidelity;
    case 5: return p.debuggability;
    case 6: return p.efficiency;
    default: throw std::out_of_range("property index " + std::to_string(index));
  }
}

class TechniqueReader {
 public:
  TechniqueReader(const json& entry, std::size_t index, std::vector<ValidationFinding>& findings)
      : entry_(entry), findings_(findings) {
    subject_ = "techniques[" + std::to_string(index) + "]";
    if (entry_.is_object()) {
      auto it = entry_.find("id");
      if (it != entry_.end() && it->is_string() && !it->get<std::string>().empty()) {
        subject_ = it->get<std::string>();
      }
    }
  }

  std::optional<Technique> Read() {
    if (!entry_.is_object()) {
      Fail("", "technique entry must be an object");
      return std::nullopt;
    }
    Technique t;
    for (const auto& [key, value] : entry_.items()) {
      if (!IsKnownKey(key)) Fail(key, "unknown field");
    }
    t.id = RequiredString("id");
    t.name = RequiredString("name");
    t.family = RequiredString("family");
    ReadModalities(t);
    ReadProperties(t);
    ReadLatency(t);
    if (auto it = entry_.find("notes"); it != entry_.end()) {
      if (it->is_string()) {
        t.notes = it->get<std::string>();
      } else {
        Fail("notes", "must be a string");
      }
    }
    if (failed_) return std::nullopt;
    return t;
  }

 private:
  void Fail(std::string field, std::string message) {
    failed_ = true;
    findings_.push_back({subject_, std::move(field), std::move(message)});
  }

  std::string RequiredString(const char* key) {
    auto it = entry_.find(key);
    if (it == entry_.end()) {
      Fail(key, "missing required field");
      return {};
    }
    if (!it->is_string()) {
      Fail(key, "must be a string");
      return {};
    }
    return it->get<std::string>();
  }

  void ReadModalities(Technique& t) {
    auto it = entry_.find("modalities");
    if (it == entry_.end()) {
      Fail("modalities", "missing required field");
      return;
    }
    if (!it->is_array()) {
      Fail("modalities", "must be a list of strings");
      return;
    }
    for (const auto& m : *it) {
      if (!m.is_string()) {
        Fail("modalities", "must be a list of strings");
        return;
      }
      t.modalities.push_back(m.get<std::string>());
    }
  }

  void ReadProperties(Technique& t) {
    auto it = entry_.find("properties");
    if (it == entry_.end()) {
      Fail("properties", "missing required field");
      return;
    }
    if (!it->is_object()) {
      Fail("properties", "must be an object");
      return;
    }
    for (const auto& [key, value] : it->items()) {
      if (std::find(kPropertyNames.begin(), kPropertyNames.end(), key) == kPropertyNames.end()) {
        Fail("properties." + key, "unknown property");
      }
    }
    for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
      const std::string name(kPropertyNames[i]);
      auto p = it->find(name);
      if (p == it->end()) {
        Fail("properties." + name, "missing rating");
      } else if (!p->is_number()) {
        Fail("properties." + name, "rating must be a number");
      } else {
        PropertyAt(t.properties, i) = p->get<double>();
      }
    }
  }

  void ReadLatency(Technique& t) {
    auto it = entry_.find("latency");
    if (it == entry_.end()) {
      Fail("latency", "missing required field");
      return;
    }
    if (!it->is_object()) {
      Fail("latency", "must be an object");
      return;
    }
    for (const auto& [key, value] : it->items()) {
      if (key != "mode" && key != "estimate_ms") Fail("latency." + key, "unknown field");
    }
    auto mode = it->find("mode");
    if (mode == it->end() || !mode->is_string()) {
      Fail("latency.mode", "must be \"online\" or \"offline_only\"");
      return;
    }
    const auto m = mode->get<std::string>();
    if (m == "online") {
      t.latency.mode = LatencyMode::kOnline;
    } else if (m == "offline_only") {
      t.latency.mode = LatencyMode::kOfflineOnly;
    } else {
      Fail("latency.mode", "must be \"online\" or \"offline_only\", got \"" + m + "\"");
      return;
    }
    if (auto est = it->find("estimate_ms"); est != it->end()) {
      if (!est->is_number()) {
        Fail("latency.estimate_ms", "must be a number");
      } else {
        t.latency.estimate_ms = est->get<double>();
      }
    }
  }

  const json& entry_;
  std::vector<ValidationFinding>& findings_;
  std::string subject_;
  bool failed_ = false;
};

Technique MakeTabular(std::string id, std::string name, std::string family, PropertyVector p,
                      LatencyProfile latency, std::string notes) {
  return Technique{std::move(id), std::move(name),  std::move(family), {"tabular"},
                   p,             latency,          std::move(notes)};
}

}  // namespace

double PropertyAt(const PropertyVector& p, std::size_t index) { return PropertyRef(p, index); }

double& PropertyAt(PropertyVector& p, std::size_t index) { return PropertyRef(p, index); }

std::vector<ValidationFinding> CheckCatalog(const Catalog& catalog) {
  std::vector<ValidationFinding> findings;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Technique& t = catalog[i];
    const std::string subject = t.id.empty() ? "techniques[" + std::to_string(i) + "]" : t.id;
    auto fail = [&](std::string field, std::string message) {
      findings.push_back({subject, std::move(field), std::move(message)});
    };
    if (t.id.empty()) {
      fail("id", "must not be empty");
    } else if (!seen.insert(t.id).second) {
      fail("id", "duplicate technique id");
    }
    if (t.modalities.empty()) fail("modalities", "must list at least one modality");
    for (const auto& m : t.modalities) {
      if (m.empty()) fail("modalities", "modality labels must not be empty");
    }
    for (std::size_t k = 0; k < kPropertyNames.size(); ++k) {
      const double v = PropertyAt(t.properties, k);
      if (!std::isfinite(v) || v < kMinRating || v > kMaxRating) {
        fail("properties." + std::string(kPropertyNames[k]),
             "rating " + FormatNumber(v) + " outside [1, 5]");
      }
    }
    if (t.latency.mode == LatencyMode::kOnline) {
      if (!t.latency.estimate_ms) {
        fail("latency.estimate_ms", "online techniques need a latency estimate");
      } else if (!std::isfinite(*t.latency.estimate_ms) || *t.latency.estimate_ms < 0.0) {
        fail("latency.estimate_ms", "estimate must be a non-negative number of milliseconds");
      }
    } else if (t.latency.estimate_ms) {
      fail("latency.estimate_ms", "offline_only techniques carry no latency estimate");
    }
  }
  return findings;
}

void ValidateCatalog(const Catalog& catalog) {
  auto findings = CheckCatalog(catalog);
  if (!findings.empty()) throw ValidationError(std::move(findings));
}

Catalog LoadCatalog(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("catalog document must be a JSON object");
  auto list = doc.find("techniques");
  if (list == doc.end() || !list->is_array()) {
    throw ParseError("catalog document needs a top-level \"techniques\" list");
  }

  std::vector<ValidationFinding> findings;
  Catalog catalog;
  std::size_t index = 0;
  for (const auto& entry : *list) {
    if (auto t = TechniqueReader(entry, index, findings).Read()) catalog.push_back(std::move(*t));
    ++index;
  }
  auto semantic = CheckCatalog(catalog);
  findings.insert(findings.end(), semantic.begin(), semantic.end());
  if (!findings.empty()) throw ValidationError(std::move(findings));
  return catalog;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return buf.str();
}

Catalog LoadCatalogFile(const std::filesystem::path& path) {
  return LoadCatalog(ReadTextFile(path));
}

Catalog BuiltinPaperCatalog() {
  return {
      MakeTabular("SHAP", "SHAP", "feature-attribution", {3, 4, 3, 3, 5, 4.5, 4},
                  LatencyProfile::Online(50),
                  "TreeExplainer on the gradient-boosted model; debuggability 4.5 gives a developer axis "
                  "D' of 4.70 (an integer 5 would give 4.90)"),
      MakeTabular("LIME", "LIME", "local-surrogate", {2, 3, 4, 4, 4, 3, 3},
                  LatencyProfile::Online(80), "LIME tabular"),
      MakeTabular("CF", "Counterfactuals", "counterfactual", {2, 3, 5, 5, 4, 3, 3},
                  LatencyProfile::Online(100), "DiCE-style counterfactual generator"),
      MakeTabular("RULE", "Rule Extraction", "rule-extraction", {5, 5, 3, 2, 4, 4, 2},
                  LatencyProfile::OfflineOnly(), "global decision-tree surrogate"),
      MakeTabular("PROTO", "Prototypes", "prototype", {2, 2, 5, 4, 3, 3, 3},
                  LatencyProfile::Online(60), "k-NN exemplar retrieval"),
  };
}

Catalog FilterApplicable(const Catalog& catalog, std::string_view modality) {
  Catalog out;
  std::copy_if(catalog.begin(), catalog.end(), std::back_inserter(out), [&](const Technique& t) {
    return std::find(t.modalities.begin(), t.modalities.end(), modality) != t.modalities.end();
  });
  return out;
}

const Technique* FindTechnique(const Catalog& catalog, std::string_view id) {
  auto it = std::find_if(catalog.begin(), catalog.end(),
                         [&](const Technique& t) { return t.id == id; });
  return it == catalog.end() ? nullptr : &*it;
}

}  // namespace ess
