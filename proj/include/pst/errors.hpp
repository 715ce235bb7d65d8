// Copyright 2026 The pstwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pst {

enum class ErrorCode {
  // graph construction / serialization
  IndexOutOfRange,
  DuplicateEdge,
  SelfLoopInEdgeList,
  NonPositiveEdgeWeight,
  ZeroQ,
  SchemaViolation,
  // spectral
  NotSymmetric,
  EigensolveFailure,
  NegativeRho,
  DimensionMismatch,
  // states
  ZeroVector,
  BadIndex,
  ZeroS,
  LinearlyDependentStates,
  BadGrid,
  // involutions
  NotOrderTwo,
  NotAutomorphism,
  LoopWeightMismatch,
  VertexNotInTransversal,
  // families
  BadParameters,
  BadN,
  BadKL,
  // cli
  UsageError,
};

const char* error_code_name(ErrorCode code);

// Single exception type carrying a machine-checkable code; what() is
// "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pst
