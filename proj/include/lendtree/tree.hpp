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

// Top-down induction of categorical decision trees.
//
// Splits are chosen by gain ratio (information gain over split information)
// among attributes whose information gain is at least the mean gain of the
// usable candidates. An attribute is usable at a node when its split
// information is positive and the split satisfies the minimum leaf rule.
// Every declared value of the chosen attribute gets an arc; values with no
// training rows become empty leaves labelled with the parent majority.

#ifndef LENDTREE_TREE_HPP_
#define LENDTREE_TREE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lendtree/class_label.hpp"
#include "lendtree/dataset.hpp"

namespace lendtree {

inline constexpr double kTieTolerance = 1e-12;

enum class SplitCriterion { kGainRatio, kInfoGain };

enum class MinLeafRule {
  // At least two non-empty partitions hold min_leaf_count rows (J48).
  kAtLeastTwoBranches,
  // Every non-empty partition holds min_leaf_count rows.
  kEveryBranch,
};

struct TreeConfig {
  SplitCriterion criterion = SplitCriterion::kGainRatio;
  bool mean_gain_filter = true;
  std::size_t min_leaf_count = 2;
  MinLeafRule min_leaf_rule = MinLeafRule::kAtLeastTwoBranches;
};

struct SplitStats {
  std::string attribute;
  double info_gain = 0.0;   // bits
  double split_info = 0.0;  // bits
  double gain_ratio = 0.0;  // NaN when unusable
  bool usable = false;
};

// -sum p log2 p over non-zero classes. Throws EmptyDistribution on zero
// total.
double entropy(const ClassCounts& counts);

// Statistics over all rows. Usable means split_info > 0; the minimum leaf
// rule is not applied here. Throws UnknownAttribute.
SplitStats gain_ratio(const Dataset& data, std::string_view attribute);

// Statistics over `rows` with usability judged under `config`.
SplitStats split_stats(const Dataset& data, std::span<const std::size_t> rows,
                       std::size_t attribute, const TreeConfig& config);

// Best candidate, or nullopt when none is usable. Ties (within
// kTieTolerance) go to the earlier candidate. Unknown names throw
// UnknownAttribute. min_leaf_count is honoured through `config`; pass
// min_leaf_count = 1 for the plain split-information test.
std::optional<std::string> choose_attribute(
    const Dataset& data, std::span<const std::string> candidates,
    const TreeConfig& config = {.min_leaf_count = 1});

std::optional<std::size_t> choose_attribute(
    const Dataset& data, std::span<const std::size_t> rows,
    std::span<const std::size_t> candidates, const TreeConfig& config);

struct DecisionNode {
  std::optional<std::string> arc;  // incoming arc label; none at the root
  std::string attribute;           // tested attribute; empty at leaves
  std::vector<DecisionNode> children;
  // Leaf class, or the majority of the training rows at internal nodes.
  ClassLabel label = ClassLabel::kBad;
  ClassCounts counts{};  // training rows reaching this node, per class

  bool is_leaf() const noexcept { return children.empty(); }
  std::size_t coverage() const noexcept { return total(counts); }
  std::size_t misclassified() const noexcept {
    return coverage() - counts[class_index(label)];
  }

  bool operator==(const DecisionNode&) const = default;
};

// Throws EmptyDataset for an empty dataset.
DecisionNode build_tree(const Dataset& data, const TreeConfig& config = {});

DecisionNode build_tree(const Dataset& data, std::span<const std::size_t> rows,
                        const TreeConfig& config);

// Explicit attribute list and incoming arc for the root.
DecisionNode build_tree(const Dataset& data,
                        std::span<const std::string> attributes,
                        std::optional<std::string> parent_arc,
                        const TreeConfig& config);

struct Condition {
  std::string attribute;
  std::string value;

  bool operator==(const Condition&) const = default;
};

enum class UnseenValuePolicy { kSubtreeMajority, kError };

struct Classification {
  ClassLabel label = ClassLabel::kBad;
  std::vector<Condition> path;
  // Stopped at an internal node with no arc for the row's value.
  bool fallback = false;
};

// Throws MissingAttributeValue when the row lacks a tested attribute, and
// NoMatch for an unseen value under UnseenValuePolicy::kError.
Classification classify(
    const DecisionNode& tree, const Instance& row,
    UnseenValuePolicy policy = UnseenValuePolicy::kSubtreeMajority);

std::size_t leaf_count(const DecisionNode& tree) noexcept;
std::size_t tree_depth(const DecisionNode& tree) noexcept;  // leaf-only = 0
std::size_t node_count(const DecisionNode& tree) noexcept;

// Weka-style listing, one line per arc: "attr = value: Class (n.0/m.0)" with
// "| " per depth ("(n.0)" when nothing is misclassified), then a blank line
// and "Number of Leaves : k". A lone leaf renders as ": Class (n.0)".
std::string render_tree(const DecisionNode& tree);

}  // namespace lendtree

#endif  // LENDTREE_TREE_HPP_
