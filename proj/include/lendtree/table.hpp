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

// Delimited text tables with a mandatory header row.

#ifndef LENDTREE_TABLE_HPP_
#define LENDTREE_TABLE_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lendtree {

struct TableRow {
  std::size_t line = 0;  // 1-based source line, header is line 1
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<TableRow> rows;

  // Case-insensitive header lookup.
  std::optional<std::size_t> column(std::string_view name) const;
};

// Fields are trimmed of surrounding blanks; double-quoted fields may contain
// the delimiter and "" escapes. Blank lines are skipped. Throws
// MalformedRowError when a row's field count differs from the header.
Table read_table(std::istream& in, char delimiter = ',');

// Quotes fields only when they contain the delimiter, a quote or a newline.
void write_table_row(std::ostream& out, const std::vector<std::string>& fields,
                     char delimiter = ',');

// Writes to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

std::string read_file(const std::filesystem::path& path);

std::string trim(std::string_view text);

bool iequals(std::string_view a, std::string_view b) noexcept;

}  // namespace lendtree

#endif  // LENDTREE_TABLE_HPP_
