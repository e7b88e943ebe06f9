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

#ifndef LENDTREE_DATASET_HPP_
#define LENDTREE_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lendtree/class_label.hpp"

namespace lendtree {

struct Table;

// Nominal attribute with its declared, ordered value set. Arc order in trees
// and rules follows this order.
struct Attribute {
  std::string name;
  std::vector<std::string> values;

  std::optional<std::size_t> index_of(std::string_view value) const;
};

// Attribute name -> value, for classifying a single row.
using Instance = std::map<std::string, std::string, std::less<>>;

// Categorical training data. Values are stored as indices into each
// attribute's declared value set.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Attribute> attributes,
                   ClassOrder class_order = kCanonicalClassOrder);

  const std::vector<Attribute>& attributes() const noexcept {
    return attributes_;
  }
  std::size_t num_attributes() const noexcept { return attributes_.size(); }
  std::optional<std::size_t> attribute_index(std::string_view name) const;
  std::vector<std::string> attribute_names() const;

  // Majority-vote tie order.
  const ClassOrder& class_order() const noexcept { return class_order_; }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  // Throws InvalidArgument when a code is outside its value set or the
  // width is wrong.
  void add_row(std::span<const std::uint32_t> codes, ClassLabel label,
               std::string id = {});
  // Values must belong to the declared sets (SchemaMismatch otherwise).
  void add_row_values(std::span<const std::string> values, ClassLabel label,
                      std::string id = {});

  std::uint32_t code(std::size_t row, std::size_t attribute) const {
    return codes_[row * attributes_.size() + attribute];
  }
  const std::string& value(std::size_t row, std::size_t attribute) const {
    return attributes_[attribute].values[code(row, attribute)];
  }
  ClassLabel label(std::size_t row) const { return labels_[row]; }
  const std::string& id(std::size_t row) const { return ids_[row]; }

  Instance instance(std::size_t row) const;
  ClassCounts class_counts() const;
  ClassCounts class_counts(std::span<const std::size_t> rows) const;

  // Same schema, selected rows only.
  Dataset subset(std::span<const std::size_t> rows) const;

 private:
  std::vector<Attribute> attributes_;
  ClassOrder class_order_ = kCanonicalClassOrder;
  std::vector<std::uint32_t> codes_;
  std::vector<ClassLabel> labels_;
  std::vector<std::string> ids_;
};

struct DatasetColumns {
  std::string id_column = "AccountNo";
  std::string class_column = "Class_Label";
};

// Every column other than the id and class columns becomes an attribute.
// Value sets and the class tie order follow first appearance in the table;
// classes never seen are appended in canonical order. Throws SchemaMismatch
// when the class column is missing and MalformedRowError for unknown labels.
Dataset dataset_from_table(const Table& table,
                           const DatasetColumns& columns = {});

}  // namespace lendtree

#endif  // LENDTREE_DATASET_HPP_
