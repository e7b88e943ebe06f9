// Copyright 2026 The lendtree Authors
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

#include "lendtree/error.hpp"

#include <string>

namespace lendtree {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kDuplicateAccount: return "DuplicateAccount";
    case ErrorCode::kUnknownAccount: return "UnknownAccount";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kNonPositiveSanction: return "NonPositiveSanction";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyDistribution: return "EmptyDistribution";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kMissingAttributeValue: return "MissingAttributeValue";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kNoMatch: return "NoMatch";
    case ErrorCode::kTooFewRows: return "TooFewRows";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

MalformedRowError::MalformedRowError(std::size_t line,
                                     const std::string& reason)
    : Error(ErrorCode::kMalformedRow,
            "line " + std::to_string(line) + ": " + reason),
      line_(line) {}

}  // namespace lendtree
