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

#include "lendtree/dataset.hpp"

#include <algorithm>

#include "lendtree/error.hpp"
#include "lendtree/table.hpp"

namespace lendtree {

std::optional<std::size_t> Attribute::index_of(std::string_view value) const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == value) return i;
  }
  return std::nullopt;
}

Dataset::Dataset(std::vector<Attribute> attributes, ClassOrder class_order)
    : attributes_(std::move(attributes)), class_order_(class_order) {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "attribute with empty name");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (attributes_[j].name == attributes_[i].name) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate attribute " + attributes_[i].name);
      }
    }
  }
  ClassOrder sorted = class_order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != kCanonicalClassOrder) {
    throw Error(ErrorCode::kInvalidArgument, "class order must list every class once");
  }
}

std::optional<std::size_t> Dataset::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Dataset::attribute_names() const {
  std::vector<std::string> names;
  for (const Attribute& a : attributes_) names.push_back(a.name);
  return names;
}

void Dataset::add_row(std::span<const std::uint32_t> codes, ClassLabel label,
                      std::string id) {
  if (codes.size() != attributes_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "row width does not match the schema");
  }
  for (std::size_t a = 0; a < codes.size(); ++a) {
    if (codes[a] >= attributes_[a].values.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "value code out of range for attribute " + attributes_[a].name);
    }
  }
  codes_.insert(codes_.end(), codes.begin(), codes.end());
  labels_.push_back(label);
  ids_.push_back(std::move(id));
}

void Dataset::add_row_values(std::span<const std::string> values,
                             ClassLabel label, std::string id) {
  if (values.size() != attributes_.size()) {
    throw Error(ErrorCode::kSchemaMismatch, "row width does not match the schema");
  }
  std::vector<std::uint32_t> codes(values.size());
  for (std::size_t a = 0; a < values.size(); ++a) {
    const auto index = attributes_[a].index_of(values[a]);
    if (!index) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "value '" + values[a] + "' not declared for " + attributes_[a].name);
    }
    codes[a] = static_cast<std::uint32_t>(*index);
  }
  add_row(codes, label, std::move(id));
}

Instance Dataset::instance(std::size_t row) const {
  Instance out;
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    out.emplace(attributes_[a].name, value(row, a));
  }
  return out;
}

ClassCounts Dataset::class_counts() const {
  ClassCounts counts{};
  for (ClassLabel l : labels_) ++counts[class_index(l)];
  return counts;
}

ClassCounts Dataset::class_counts(std::span<const std::size_t> rows) const {
  ClassCounts counts{};
  for (std::size_t r : rows) ++counts[class_index(labels_[r])];
  return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  Dataset out(attributes_, class_order_);
  const std::size_t width = attributes_.size();
  for (std::size_t r : rows) {
    out.codes_.insert(out.codes_.end(), codes_.begin() + r * width,
                      codes_.begin() + (r + 1) * width);
    out.labels_.push_back(labels_[r]);
    out.ids_.push_back(ids_[r]);
  }
  return out;
}

Dataset dataset_from_table(const Table& table, const DatasetColumns& columns) {
  const auto class_col = table.column(columns.class_column);
  if (!class_col) {
    throw Error(ErrorCode::kSchemaMismatch,
                "table has no '" + columns.class_column + "' column");
  }
  const auto id_col = table.column(columns.id_column);
  std::vector<std::size_t> attr_cols;
  std::vector<Attribute> attributes;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == *class_col || (id_col && c == *id_col)) continue;
    attr_cols.push_back(c);
    attributes.push_back(Attribute{table.header[c], {}});
  }

  std::vector<ClassLabel> seen_classes;
  std::vector<std::vector<std::uint32_t>> coded;
  std::vector<ClassLabel> labels;
  for (const TableRow& row : table.rows) {
    const auto label = parse_class_label(row.fields[*class_col]);
    if (!label) {
      throw MalformedRowError(row.line,
                              "unknown class label '" + row.fields[*class_col] + "'");
    }
    if (std::find(seen_classes.begin(), seen_classes.end(), *label) ==
        seen_classes.end()) {
      seen_classes.push_back(*label);
    }
    std::vector<std::uint32_t> codes;
    for (std::size_t i = 0; i < attr_cols.size(); ++i) {
      const std::string& v = row.fields[attr_cols[i]];
      if (v.empty()) throw MalformedRowError(row.line, "empty value for " + attributes[i].name);
      auto index = attributes[i].index_of(v);
      if (!index) {
        attributes[i].values.push_back(v);
        index = attributes[i].values.size() - 1;
      }
      codes.push_back(static_cast<std::uint32_t>(*index));
    }
    coded.push_back(std::move(codes));
    labels.push_back(*label);
  }
  for (ClassLabel l : kAllClasses) {
    if (std::find(seen_classes.begin(), seen_classes.end(), l) == seen_classes.end()) {
      seen_classes.push_back(l);
    }
  }
  ClassOrder order{};
  std::copy(seen_classes.begin(), seen_classes.end(), order.begin());

  Dataset data(std::move(attributes), order);
  for (std::size_t r = 0; r < coded.size(); ++r) {
    data.add_row(coded[r], labels[r],
                 id_col ? table.rows[r].fields[*id_col] : std::string{});
  }
  return data;
}

}  // namespace lendtree
