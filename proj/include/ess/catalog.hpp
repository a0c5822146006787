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

#ifndef ESS_CATALOG_HPP_
#define ESS_CATALOG_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ess/error.hpp"

namespace ess {

inline constexpr double kMinRating = 1.0;
inline constexpr double kMaxRating = 5.0;

// The seven intrinsic properties of an explanation technique, each rated on a
// 1-5 scale. Fractional ratings are allowed.
struct PropertyVector {
  double auditability = 1.0;
  double traceability = 1.0;
  double comprehensibility = 1.0;
  double actionability = 1.0;
  double fidelity = 1.0;
  double debuggability = 1.0;
  double efficiency = 1.0;

  bool operator==(const PropertyVector&) const = default;
};

// Field names in declaration order, exactly as they appear in catalog files.
inline constexpr std::array<std::string_view, 7> kPropertyNames = {
    "auditability",  "traceability",  "comprehensibility", "actionability",
    "fidelity",      "debuggability", "efficiency"};

// Access by position in kPropertyNames.
double PropertyAt(const PropertyVector& p, std::size_t index);
double& PropertyAt(PropertyVector& p, std::size_t index);

enum class LatencyMode { kOnline, kOfflineOnly };

struct LatencyProfile {
  LatencyMode mode = LatencyMode::kOfflineOnly;
  // Present iff mode == kOnline.
  std::optional<double> estimate_ms;

  static LatencyProfile Online(double estimate_ms) {
    return {LatencyMode::kOnline, estimate_ms};
  }
  static LatencyProfile OfflineOnly() { return {LatencyMode::kOfflineOnly, std::nullopt}; }

  bool operator==(const LatencyProfile&) const = default;
};

struct Technique {
  std::string id;
  std::string name;
  std::string family;
  std::vector<std::string> modalities;
  PropertyVector properties;
  LatencyProfile latency;
  std::optional<std::string> notes;

  bool operator==(const Technique&) const = default;
};

// Ordered; order is significant for rendering.
using Catalog = std::vector<Technique>;

// Returns every invariant violation in `catalog` (empty when valid).
std::vector<ValidationFinding> CheckCatalog(const Catalog& catalog);

// Throws ValidationError carrying all findings, if any.
void ValidateCatalog(const Catalog& catalog);

// Parses a JSON catalog document:
//
//   {"techniques": [{"id": "...", "name": "...", "family": "...",
//                    "modalities": ["tabular"],
//                    "properties": {"auditability": 3, ...},
//                    "latency": {"mode": "online", "estimate_ms": 50},
//                    "notes": "..."}]}
//
// Throws ParseError for malformed documents and ValidationError for
// structurally sound documents that violate catalog invariants.
Catalog LoadCatalog(std::string_view document);

// Reads and parses a catalog file. Throws IoError if it cannot be read.
Catalog LoadCatalogFile(const std::filesystem::path& path);

// The five tabular techniques of the fraud-detection instantiation, with
// latency estimates read as 50/80/100/60 ms point values and rule extraction
// offline only.
Catalog BuiltinPaperCatalog();

// Sub-catalog of techniques whose modalities contain `modality`, order kept.
Catalog FilterApplicable(const Catalog& catalog, std::string_view modality);

const Technique* FindTechnique(const Catalog& catalog, std::string_view id);

// Reads a whole text file. Throws IoError.
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace ess

#endif  // ESS_CATALOG_HPP_
