// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msk/error.h"

namespace msk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kMalformedOracle:
      return "malformed-oracle";
    case ErrorCode::kSizeLimit:
      return "size-limit";
    case ErrorCode::kDomain:
      return "domain-error";
    case ErrorCode::kInvalidPartition:
      return "invalid-partition";
    case ErrorCode::kInvariantViolation:
      return "invariant-violation";
    case ErrorCode::kConstructionInfeasible:
      return "construction-infeasible";
    case ErrorCode::kParse:
      return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace msk
