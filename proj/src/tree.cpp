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

#include "lendtree/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lendtree/error.hpp"

namespace lendtree {
namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

std::vector<std::size_t> all_rows(const Dataset& data) {
  std::vector<std::size_t> rows(data.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

class Builder {
 public:
  Builder(const Dataset& data, const TreeConfig& config)
      : data_(data), config_(config) {}

  DecisionNode grow(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& candidates,
                    std::optional<std::string> arc) const {
    DecisionNode node;
    node.arc = std::move(arc);
    node.counts = data_.class_counts(rows);
    node.label = majority(node.counts, data_.class_order());

    const bool pure = node.counts[class_index(node.label)] == rows.size();
    if (pure || candidates.empty()) return node;
    const auto chosen = choose_attribute(data_, rows, candidates, config_);
    if (!chosen) return node;

    const Attribute& attribute = data_.attributes()[*chosen];
    std::vector<std::vector<std::size_t>> parts(attribute.values.size());
    for (std::size_t r : rows) parts[data_.code(r, *chosen)].push_back(r);

    std::vector<std::size_t> remaining;
    for (std::size_t c : candidates) {
      if (c != *chosen) remaining.push_back(c);
    }

    node.attribute = attribute.name;
    for (std::size_t v = 0; v < parts.size(); ++v) {
      if (parts[v].empty()) {
        DecisionNode empty;
        empty.arc = attribute.values[v];
        empty.label = node.label;
        node.children.push_back(std::move(empty));
      } else {
        node.children.push_back(grow(parts[v], remaining, attribute.values[v]));
      }
    }
    return node;
  }

 private:
  const Dataset& data_;
  const TreeConfig& config_;
};

void validate(const TreeConfig& config) {
  if (config.min_leaf_count < 1) {
    throw Error(ErrorCode::kInvalidConfig, "min_leaf_count must be >= 1");
  }
}

std::string count_text(std::size_t n) { return std::to_string(n) + ".0"; }

void render(const DecisionNode& node, std::size_t depth, std::ostringstream& out) {
  for (const DecisionNode& child : node.children) {
    for (std::size_t i = 0; i < depth; ++i) out << "| ";
    out << node.attribute << " = " << child.arc.value_or("");
    if (child.is_leaf()) {
      out << ": " << class_display_name(child.label) << " ("
          << count_text(child.coverage());
      if (child.misclassified() > 0) out << '/' << count_text(child.misclassified());
      out << ")\n";
    } else {
      out << '\n';
      render(child, depth + 1, out);
    }
  }
}

}  // namespace

double entropy(const ClassCounts& counts) {
  const std::size_t n = total(counts);
  if (n == 0) throw Error(ErrorCode::kEmptyDistribution, "entropy of an empty distribution");
  double h = 0.0;
  for (std::size_t c : counts) h -= plogp(static_cast<double>(c) / n);
  return std::max(0.0, h);
}

SplitStats split_stats(const Dataset& data, std::span<const std::size_t> rows,
                       std::size_t attribute, const TreeConfig& config) {
  const Attribute& attr = data.attributes().at(attribute);
  SplitStats stats;
  stats.attribute = attr.name;
  if (rows.empty()) {
    stats.gain_ratio = std::numeric_limits<double>::quiet_NaN();
    return stats;
  }
  std::vector<ClassCounts> parts(attr.values.size(), ClassCounts{});
  ClassCounts all{};
  for (std::size_t r : rows) {
    ++parts[data.code(r, attribute)][class_index(data.label(r))];
    ++all[class_index(data.label(r))];
  }
  const double n = static_cast<double>(rows.size());
  double remainder = 0.0;
  std::size_t non_empty = 0;
  std::size_t large = 0;
  bool every_large = true;
  for (const ClassCounts& part : parts) {
    const std::size_t size = total(part);
    if (size == 0) continue;
    ++non_empty;
    if (size >= config.min_leaf_count) {
      ++large;
    } else {
      every_large = false;
    }
    const double weight = size / n;
    remainder += weight * entropy(part);
    stats.split_info -= plogp(weight);
  }
  stats.info_gain = std::max(0.0, entropy(all) - remainder);
  stats.split_info = std::max(0.0, stats.split_info);
  const bool leaf_rule = config.min_leaf_rule == MinLeafRule::kEveryBranch
                             ? every_large
                             : large >= 2;
  stats.usable = non_empty >= 2 && stats.split_info > 0.0 && leaf_rule;
  stats.gain_ratio = stats.usable ? stats.info_gain / stats.split_info
                                  : std::numeric_limits<double>::quiet_NaN();
  return stats;
}

SplitStats gain_ratio(const Dataset& data, std::string_view attribute) {
  const auto index = data.attribute_index(attribute);
  if (!index) {
    throw Error(ErrorCode::kUnknownAttribute, "unknown attribute " + std::string(attribute));
  }
  const auto rows = all_rows(data);
  return split_stats(data, rows, *index, TreeConfig{.min_leaf_count = 1});
}

std::optional<std::size_t> choose_attribute(
    const Dataset& data, std::span<const std::size_t> rows,
    std::span<const std::size_t> candidates, const TreeConfig& config) {
  std::vector<SplitStats> stats;
  std::vector<std::size_t> usable;
  double gain_sum = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    stats.push_back(split_stats(data, rows, candidates[i], config));
    if (stats.back().usable) {
      usable.push_back(i);
      gain_sum += stats.back().info_gain;
    }
  }
  if (usable.empty()) return std::nullopt;
  const double mean_gain = gain_sum / usable.size();

  std::optional<std::size_t> best;
  double best_score = 0.0;
  for (std::size_t i : usable) {
    const SplitStats& s = stats[i];
    if (config.mean_gain_filter && s.info_gain < mean_gain - kTieTolerance) continue;
    const double score =
        config.criterion == SplitCriterion::kGainRatio ? s.gain_ratio : s.info_gain;
    if (!best || score > best_score + kTieTolerance) {
      best = i;
      best_score = score;
    }
  }
  return candidates[*best];
}

std::optional<std::string> choose_attribute(const Dataset& data,
                                            std::span<const std::string> candidates,
                                            const TreeConfig& config) {
  std::vector<std::size_t> indices;
  for (const std::string& name : candidates) {
    const auto index = data.attribute_index(name);
    if (!index) throw Error(ErrorCode::kUnknownAttribute, "unknown attribute " + name);
    indices.push_back(*index);
  }
  const auto rows = all_rows(data);
  const auto chosen = choose_attribute(data, rows, indices, config);
  if (!chosen) return std::nullopt;
  return data.attributes()[*chosen].name;
}

DecisionNode build_tree(const Dataset& data, std::span<const std::size_t> rows,
                        const TreeConfig& config) {
  validate(config);
  if (rows.empty()) throw Error(ErrorCode::kEmptyDataset, "cannot induce a tree from no rows");
  std::vector<std::size_t> candidates(data.num_attributes());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  return Builder(data, config).grow({rows.begin(), rows.end()}, candidates, std::nullopt);
}

DecisionNode build_tree(const Dataset& data, const TreeConfig& config) {
  const auto rows = all_rows(data);
  return build_tree(data, rows, config);
}

DecisionNode build_tree(const Dataset& data, std::span<const std::string> attributes,
                        std::optional<std::string> parent_arc,
                        const TreeConfig& config) {
  validate(config);
  if (data.empty()) throw Error(ErrorCode::kEmptyDataset, "cannot induce a tree from no rows");
  std::vector<std::size_t> candidates;
  for (const std::string& name : attributes) {
    const auto index = data.attribute_index(name);
    if (!index) throw Error(ErrorCode::kUnknownAttribute, "unknown attribute " + name);
    if (std::find(candidates.begin(), candidates.end(), *index) == candidates.end()) {
      candidates.push_back(*index);
    }
  }
  return Builder(data, config).grow(all_rows(data), candidates, std::move(parent_arc));
}

Classification classify(const DecisionNode& tree, const Instance& row,
                        UnseenValuePolicy policy) {
  Classification result;
  const DecisionNode* node = &tree;
  while (!node->is_leaf()) {
    const auto value = row.find(node->attribute);
    if (value == row.end()) {
      throw Error(ErrorCode::kMissingAttributeValue,
                  "row has no value for " + node->attribute);
    }
    const auto child = std::find_if(
        node->children.begin(), node->children.end(),
        [&](const DecisionNode& c) { return c.arc == value->second; });
    if (child == node->children.end()) {
      if (policy == UnseenValuePolicy::kError) {
        throw Error(ErrorCode::kNoMatch, "no arc for " + node->attribute + " = " +
                                             value->second);
      }
      result.fallback = true;
      break;
    }
    result.path.push_back({node->attribute, value->second});
    node = &*child;
  }
  result.label = node->label;
  return result;
}

std::size_t leaf_count(const DecisionNode& tree) noexcept {
  if (tree.is_leaf()) return 1;
  std::size_t n = 0;
  for (const DecisionNode& c : tree.children) n += leaf_count(c);
  return n;
}

std::size_t tree_depth(const DecisionNode& tree) noexcept {
  std::size_t depth = 0;
  for (const DecisionNode& c : tree.children) depth = std::max(depth, 1 + tree_depth(c));
  return depth;
}

std::size_t node_count(const DecisionNode& tree) noexcept {
  std::size_t n = 1;
  for (const DecisionNode& c : tree.children) n += node_count(c);
  return n;
}

std::string render_tree(const DecisionNode& tree) {
  std::ostringstream out;
  if (tree.is_leaf()) {
    out << ": " << class_display_name(tree.label) << " (" << count_text(tree.coverage());
    if (tree.misclassified() > 0) out << '/' << count_text(tree.misclassified());
    out << ")\n";
  } else {
    render(tree, 0, out);
  }
  out << "\nNumber of Leaves : " << leaf_count(tree) << '\n';
  return out.str();
}

}  // namespace lendtree
