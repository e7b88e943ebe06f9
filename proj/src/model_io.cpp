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

#include "lendtree/model_io.hpp"

#include <utility>

#include <nlohmann/json.hpp>

#include "lendtree/error.hpp"

namespace lendtree {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormat = "lendtree-model";
constexpr int kVersion = 1;

[[noreturn]] void mismatch(const std::string& message) {
  throw Error(ErrorCode::kSchemaMismatch, "model: " + message);
}

ClassLabel label_from(const Json& j) {
  if (!j.is_string()) mismatch("class label must be a string");
  const auto label = parse_class_label(j.get<std::string>());
  if (!label) mismatch("unknown class label '" + j.get<std::string>() + "'");
  return *label;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) mismatch(std::string("missing \"") + key + "\"");
  return j.at(key);
}

Json node_json(const DecisionNode& node) {
  Json j;
  j["arc"] = node.arc ? Json(*node.arc) : Json(nullptr);
  j["label"] = std::string(class_name(node.label));
  Json counts = Json::object();
  for (ClassLabel c : kAllClasses) counts[std::string(class_name(c))] = node.counts[class_index(c)];
  j["counts"] = std::move(counts);
  if (!node.is_leaf()) {
    j["attribute"] = node.attribute;
    Json children = Json::array();
    for (const DecisionNode& child : node.children) children.push_back(node_json(child));
    j["children"] = std::move(children);
  }
  return j;
}

DecisionNode node_from(const Json& j, bool root) {
  DecisionNode node;
  const Json& arc = member(j, "arc");
  if (arc.is_string()) {
    node.arc = arc.get<std::string>();
  } else if (!arc.is_null()) {
    mismatch("arc must be a string or null");
  }
  if (root == node.arc.has_value()) {
    mismatch(root ? "root node has an arc" : "child node has no arc");
  }
  node.label = label_from(member(j, "label"));
  const Json& counts = member(j, "counts");
  if (!counts.is_object()) mismatch("counts must be an object");
  for (const auto& [name, value] : counts.items()) {
    const auto label = parse_class_label(name);
    if (!label) mismatch("unknown class in counts '" + name + "'");
    if (!value.is_number_unsigned()) mismatch("counts must be non-negative integers");
    node.counts[class_index(*label)] = value.get<std::size_t>();
  }
  if (j.contains("children")) {
    const Json& children = j.at("children");
    if (!children.is_array() || children.empty()) mismatch("children must be a non-empty array");
    const Json& attribute = member(j, "attribute");
    if (!attribute.is_string() || attribute.get<std::string>().empty()) {
      mismatch("internal node needs an attribute name");
    }
    node.attribute = attribute.get<std::string>();
    for (const Json& child : children) node.children.push_back(node_from(child, false));
  }
  return node;
}

DecisionNode tree_from(const Json& j) { return node_from(j, true); }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    mismatch(e.what());
  }
}

std::string_view criterion_name(SplitCriterion c) {
  return c == SplitCriterion::kGainRatio ? "gain-ratio" : "info-gain";
}

std::string_view rule_name(MinLeafRule r) {
  return r == MinLeafRule::kAtLeastTwoBranches ? "two-branches" : "every-branch";
}

template <typename T>
T typed(const Json& j, const char* key) {
  const Json& v = member(j, key);
  try {
    return v.get<T>();
  } catch (const Json::exception&) {
    mismatch(std::string("bad type for \"") + key + "\"");
  }
}

}  // namespace

std::string tree_to_json(const DecisionNode& tree) { return node_json(tree).dump(2) + "\n"; }

DecisionNode tree_from_json(std::string_view text) { return tree_from(parse(text)); }

std::string model_to_json(const Model& model) {
  Json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  Json attributes = Json::array();
  for (const Attribute& a : model.attributes) {
    attributes.push_back(Json{{"name", a.name}, {"values", a.values}});
  }
  j["attributes"] = std::move(attributes);
  Json order = Json::array();
  for (ClassLabel c : model.class_order) order.push_back(std::string(class_name(c)));
  j["class_order"] = std::move(order);
  j["tree"] = node_json(model.tree);
  j["tree_config"] = Json{
      {"criterion", criterion_name(model.tree_config.criterion)},
      {"mean_gain_filter", model.tree_config.mean_gain_filter},
      {"min_leaf_count", model.tree_config.min_leaf_count},
      {"min_leaf_rule", rule_name(model.tree_config.min_leaf_rule)}};
  j["prune_config"] = Json{{"confidence", model.prune_config.confidence},
                           {"enabled", model.prune_config.enabled},
                           {"slack", model.prune_config.slack}};
  return j.dump(2) + "\n";
}

Model model_from_json(std::string_view text) {
  const Json j = parse(text);
  if (typed<std::string>(j, "format") != kFormat) mismatch("not a lendtree model");
  if (typed<int>(j, "version") != kVersion) mismatch("unsupported model version");

  Model model;
  const Json& attributes = member(j, "attributes");
  if (!attributes.is_array()) mismatch("attributes must be an array");
  for (const Json& a : attributes) {
    model.attributes.push_back(
        Attribute{typed<std::string>(a, "name"), typed<std::vector<std::string>>(a, "values")});
  }

  const Json& order = member(j, "class_order");
  if (!order.is_array() || order.size() != kNumClasses) {
    mismatch("class_order must list the five classes");
  }
  std::array<bool, kNumClasses> seen{};
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    model.class_order[i] = label_from(order[i]);
    if (std::exchange(seen[class_index(model.class_order[i])], true)) {
      mismatch("class_order repeats a class");
    }
  }

  model.tree = tree_from(member(j, "tree"));

  const Json& tc = member(j, "tree_config");
  const std::string criterion = typed<std::string>(tc, "criterion");
  if (criterion == "gain-ratio") {
    model.tree_config.criterion = SplitCriterion::kGainRatio;
  } else if (criterion == "info-gain") {
    model.tree_config.criterion = SplitCriterion::kInfoGain;
  } else {
    mismatch("unknown criterion '" + criterion + "'");
  }
  model.tree_config.mean_gain_filter = typed<bool>(tc, "mean_gain_filter");
  model.tree_config.min_leaf_count = typed<std::size_t>(tc, "min_leaf_count");
  const std::string rule = typed<std::string>(tc, "min_leaf_rule");
  if (rule == "two-branches") {
    model.tree_config.min_leaf_rule = MinLeafRule::kAtLeastTwoBranches;
  } else if (rule == "every-branch") {
    model.tree_config.min_leaf_rule = MinLeafRule::kEveryBranch;
  } else {
    mismatch("unknown min_leaf_rule '" + rule + "'");
  }

  const Json& pc = member(j, "prune_config");
  model.prune_config.confidence = typed<double>(pc, "confidence");
  model.prune_config.enabled = typed<bool>(pc, "enabled");
  model.prune_config.slack = typed<double>(pc, "slack");
  return model;
}

}  // namespace lendtree
