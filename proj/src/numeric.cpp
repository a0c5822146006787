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

#include "ess/numeric.hpp"

#include <charconv>
#include <cmath>

namespace ess {

double RoundHalfUp(double value, int decimals) {
  if (!std::isfinite(value)) return value;
  const double scale = std::pow(10.0, decimals);
  const double magnitude = std::floor(std::abs(value) * scale + 0.5 + kScoreTolerance) / scale;
  return std::copysign(magnitude, value);
}

std::string FormatFixed(double value, int decimals) {
  double rounded = RoundHalfUp(value, decimals);
  if (rounded == 0.0) rounded = 0.0;  // no "-0.00"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, rounded, std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

}  // namespace ess
