// Copyright 2026 The Fidelity Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fidelity {

enum class ErrorKind {
  kDimensionMismatch,
  kNormalization,
  kInvalidOperator,
  kInvalidArgument,
  kInfeasibleInput,
  kNumericalFailure,
  kUnsupportedRange,
  kParse,
  kSearchExhausted,
};

/// Stable snake_case name used in machine-readable error output.
constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kNormalization: return "normalization";
    case ErrorKind::kInvalidOperator: return "invalid_operator";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kInfeasibleInput: return "infeasible_input";
    case ErrorKind::kNumericalFailure: return "numerical_failure";
    case ErrorKind::kUnsupportedRange: return "unsupported_range";
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kSearchExhausted: return "search_exhausted";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fidelity
