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

// Lossless JSON form of trees and trained models.
//
// Node: {"arc": str|null, "label": "Good", "counts": {"Excellent": n, ...},
//        "attribute": str, "children": [node, ...]}  (last two on internal
//        nodes only)
// Model: {"format": "lendtree-model", "version": 1,
//         "attributes": [{"name": str, "values": [str, ...]}, ...],
//         "class_order": [str x5], "tree": node,
//         "tree_config": {...}, "prune_config": {...}}

#ifndef LENDTREE_MODEL_IO_HPP_
#define LENDTREE_MODEL_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "lendtree/class_label.hpp"
#include "lendtree/dataset.hpp"
#include "lendtree/prune.hpp"
#include "lendtree/tree.hpp"

namespace lendtree {

struct Model {
  std::vector<Attribute> attributes;
  ClassOrder class_order = kCanonicalClassOrder;
  DecisionNode tree;
  TreeConfig tree_config;
  PruneConfig prune_config;
};

std::string tree_to_json(const DecisionNode& tree);
// Throws SchemaMismatch for structurally invalid input.
DecisionNode tree_from_json(std::string_view text);

std::string model_to_json(const Model& model);
Model model_from_json(std::string_view text);

}  // namespace lendtree

#endif  // LENDTREE_MODEL_IO_HPP_
