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

#include "ess/provenance.hpp"

#include <algorithm>
#include <cstdio>

namespace ess {

const ProvenanceRecord* ProvenanceTrail::Find(std::string_view stage) const {
  auto it = std::find_if(records.begin(), records.end(),
                         [&](const ProvenanceRecord& r) { return r.stage == stage; });
  return it == records.end() ? nullptr : &*it;
}

std::string Fnv1a64Digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

std::string DigestJson(const nlohmann::json& value) { return Fnv1a64Digest(value.dump()); }

}  // namespace ess
