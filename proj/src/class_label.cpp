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

#include "lendtree/class_label.hpp"

#include <cctype>
#include <string>

namespace lendtree {
namespace {

constexpr std::array<std::string_view, kNumClasses> kNames = {
    "Excellent", "VeryGood", "Good", "Marginal", "Bad"};
constexpr std::array<std::string_view, kNumClasses> kDisplayNames = {
    "Excellent", "Very Good", "Good", "Marginal", "Bad"};

std::string fold(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

std::string_view class_name(ClassLabel label) noexcept {
  return kNames[class_index(label)];
}

std::string_view class_display_name(ClassLabel label) noexcept {
  return kDisplayNames[class_index(label)];
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
  const std::string key = fold(text);
  for (ClassLabel label : kAllClasses) {
    if (key == fold(class_name(label))) return label;
  }
  return std::nullopt;
}

std::size_t total(const ClassCounts& counts) noexcept {
  std::size_t sum = 0;
  for (std::size_t c : counts) sum += c;
  return sum;
}

ClassLabel majority(const ClassCounts& counts, const ClassOrder& order) noexcept {
  ClassLabel best = order[0];
  for (ClassLabel label : order) {
    if (counts[class_index(label)] > counts[class_index(best)]) best = label;
  }
  return best;
}

}  // namespace lendtree
