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

#ifndef ESS_PROVENANCE_HPP_
#define ESS_PROVENANCE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ess {

// One pipeline stage: what went in (digested), the parameters it used, and
// what it produced.
struct ProvenanceRecord {
  std::string stage;
  std::string inputs_digest;
  nlohmann::json parameters;
  nlohmann::json outputs;

  bool operator==(const ProvenanceRecord&) const = default;
};

// Records in pipeline order: catalog, aggregation, adjustment,
// discretisation, selection, recommendation.
struct ProvenanceTrail {
  std::vector<ProvenanceRecord> records;
  // Only set when the caller opts in; keeps default output reproducible.
  std::string generated_at;

  const ProvenanceRecord* Find(std::string_view stage) const;

  bool operator==(const ProvenanceTrail&) const = default;
};

// 64-bit FNV-1a, rendered as "fnv1a64:<16 hex digits>".
std::string Fnv1a64Digest(std::string_view bytes);

// Digest of the compact serialisation of `value`.
std::string DigestJson(const nlohmann::json& value);

}  // namespace ess

#endif  // ESS_PROVENANCE_HPP_
