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

#include "ess/error.hpp"

#include <utility>

namespace ess {
namespace {

std::string JoinFindings(const std::vector<ValidationFinding>& findings) {
  std::string msg = "validation failed";
  for (const auto& f : findings) {
    msg += "\n  ";
    msg += f.ToString();
  }
  return msg;
}

}  // namespace

std::string ValidationFinding::ToString() const {
  std::string s = subject.empty() ? std::string("<catalog>") : subject;
  if (!field.empty()) s += "." + field;
  s += ": " + message;
  return s;
}

ValidationError::ValidationError(std::vector<ValidationFinding> findings)
    : Error(JoinFindings(findings)), findings_(std::move(findings)) {}

}  // namespace ess
