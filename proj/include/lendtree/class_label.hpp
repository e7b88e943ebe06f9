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

#ifndef LENDTREE_CLASS_LABEL_HPP_
#define LENDTREE_CLASS_LABEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lendtree {

// Five-level lending grade. Enumerator order is best-first; the quality order
// is Excellent > VeryGood > Good > Marginal > Bad.
enum class ClassLabel : std::uint8_t {
  kExcellent = 0,
  kVeryGood = 1,
  kGood = 2,
  kMarginal = 3,
  kBad = 4,
};

inline constexpr std::size_t kNumClasses = 5;

inline constexpr std::array<ClassLabel, kNumClasses> kAllClasses = {
    ClassLabel::kExcellent, ClassLabel::kVeryGood, ClassLabel::kGood,
    ClassLabel::kMarginal, ClassLabel::kBad};

constexpr std::size_t class_index(ClassLabel label) noexcept {
  return static_cast<std::size_t>(label);
}

// Ordinal score used for sector ranking: Excellent=5 ... Bad=1.
constexpr int ordinal_rank(ClassLabel label) noexcept {
  return 5 - static_cast<int>(label);
}

// Identifier form used in tables: "VeryGood".
std::string_view class_name(ClassLabel label) noexcept;

// Human form used in rendered trees and rules: "Very Good".
std::string_view class_display_name(ClassLabel label) noexcept;

// Accepts either form, case-insensitively.
std::optional<ClassLabel> parse_class_label(std::string_view text);

// Per-class row counts.
using ClassCounts = std::array<std::size_t, kNumClasses>;

// Tie-break order for majority votes: the first listed class wins a tie.
using ClassOrder = std::array<ClassLabel, kNumClasses>;

inline constexpr ClassOrder kCanonicalClassOrder = kAllClasses;

std::size_t total(const ClassCounts& counts) noexcept;

// Most frequent class; ties go to the class listed first in `order`.
ClassLabel majority(const ClassCounts& counts,
                    const ClassOrder& order = kCanonicalClassOrder) noexcept;

}  // namespace lendtree

#endif  // LENDTREE_CLASS_LABEL_HPP_
