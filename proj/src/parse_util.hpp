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

// Strict scalar parsing shared by the table and config readers.

#ifndef LENDTREE_SRC_PARSE_UTIL_HPP_
#define LENDTREE_SRC_PARSE_UTIL_HPP_

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lendtree/table.hpp"

namespace lendtree::detail {

// Finite decimal; the whole field must be consumed. "inf" is accepted only
// when `allow_infinity` is set.
inline std::optional<double> parse_double(std::string_view text,
                                          bool allow_infinity = false) {
  const std::string t = trim(text);
  if (allow_infinity) {
    if (iequals(t, "inf") || iequals(t, "+inf") || iequals(t, "infinity")) {
      return HUGE_VAL;
    }
  }
  if (t.empty()) return std::nullopt;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

template <typename Int>
std::optional<Int> parse_integer(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  Int value{};
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

inline std::optional<bool> parse_bool(std::string_view text) {
  const std::string t = trim(text);
  for (const char* yes : {"true", "1", "yes", "y", "on"}) {
    if (iequals(t, yes)) return true;
  }
  for (const char* no : {"false", "0", "no", "n", "off"}) {
    if (iequals(t, no)) return false;
  }
  return std::nullopt;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Shortest round-trip decimal form.
inline std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace lendtree::detail

#endif  // LENDTREE_SRC_PARSE_UTIL_HPP_
