/*
 * Copyright 2026 The ghnets Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ghnets {

/// An argument lies outside the domain of an operation (negative radius,
/// point outside the window, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The exhaustive solver refuses instances above its feasibility threshold.
class ThresholdExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction or checker was asked to run outside the hypotheses that
/// make its guarantee meaningful.
class PreconditionUnmet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. `where` names the offending field or offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace ghnets
