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

#ifndef ESS_NUMERIC_HPP_
#define ESS_NUMERIC_HPP_

#include <string>

namespace ess {

// Absolute slack used when comparing computed scores against band edges and
// latency thresholds, so that e.g. 0.5*4 + 0.4*3 + 0.1*3 lands on 3.5.
inline constexpr double kScoreTolerance = 1e-9;

// Rounds half away from zero at `decimals` places. Values within
// kScoreTolerance of a half step round up.
double RoundHalfUp(double value, int decimals);

// Half-up rounded fixed-point text. Always uses '.' and never depends on the
// process locale.
std::string FormatFixed(double value, int decimals);

}  // namespace ess

#endif  // ESS_NUMERIC_HPP_
