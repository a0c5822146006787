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

#ifndef ESS_ERROR_HPP_
#define ESS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace ess {

// Base for every error the engine raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document (not well-formed JSON, wrong top-level shape).
class ParseError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Precondition of a domain operation not met (empty input, no applicable
// techniques, mismatched id sets).
class DomainError : public Error {
 public:
  using Error::Error;
};

// One problem found while validating a catalog or scenario. `subject` is the
// technique id (or "scenario:<name>"), `field` the offending field path.
struct ValidationFinding {
  std::string subject;
  std::string field;
  std::string message;

  std::string ToString() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationFinding> findings);

  const std::vector<ValidationFinding>& findings() const { return findings_; }

 private:
  std::vector<ValidationFinding> findings_;
};

}  // namespace ess

#endif  // ESS_ERROR_HPP_
