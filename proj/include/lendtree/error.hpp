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

#ifndef LENDTREE_ERROR_HPP_
#define LENDTREE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lendtree {

// Values are mirrored one-to-one by the LT_E_* constants of the C API.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kIo = 2,
  kInvalidConfig = 3,
  kMalformedRow = 4,
  kDuplicateAccount = 5,
  kUnknownAccount = 6,
  kEmptyDataset = 7,
  kNonPositiveSanction = 8,
  kNonFiniteValue = 9,
  kInvalidWeights = 10,
  kOutOfRange = 11,
  kEmptyDistribution = 12,
  kUnknownAttribute = 13,
  kMissingAttributeValue = 14,
  kInvalidCounts = 15,
  kNoMatch = 16,
  kTooFewRows = 17,
  kSchemaMismatch = 18,
  kInvalidProfile = 19,
  kInternal = 99,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Row-level parse failure; `line` is 1-based and counts the header row.
class MalformedRowError : public Error {
 public:
  MalformedRowError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lendtree

#endif  // LENDTREE_ERROR_HPP_
