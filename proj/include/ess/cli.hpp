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

#ifndef ESS_CLI_HPP_
#define ESS_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace ess::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `ess` tool. Documents go to `out` (or --out), diagnostics
// to `err`. Returns the process exit code.
int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ess::cli

#endif  // ESS_CLI_HPP_
