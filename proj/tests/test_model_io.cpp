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

#include <random>
#include <optional>
#include <sstream>

#include <gtest/gtest.h>

#include "lendtree/error.hpp"
#include "lendtree/model_io.hpp"
#include "test_util.hpp"

namespace lendtree {
namespace {

std::optional<ErrorCode> tree_error(const std::string& json) {
  try {
    tree_from_json(json);
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(ModelIo, TreeRoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Dataset d = testing::random_dataset(rng, {});
    const DecisionNode t = build_tree(d, TreeConfig{.min_leaf_count = 1});
    const std::string json = tree_to_json(t);
    EXPECT_EQ(tree_from_json(json), t);
    EXPECT_EQ(tree_to_json(tree_from_json(json)), json);
  }
}

TEST(ModelIo, ModelRoundTrip) {
  std::mt19937_64 rng(2);
  const Dataset d = testing::random_dataset(rng, {.max_rows = 30, .min_rows = 10});
  Model m;
  m.attributes = d.attributes();
  m.class_order = d.class_order();
  m.tree_config = {.criterion = SplitCriterion::kInfoGain, .mean_gain_filter = false,
                   .min_leaf_count = 3, .min_leaf_rule = MinLeafRule::kEveryBranch};
  m.prune_config = {.confidence = 0.1, .slack = 0.0};
  m.tree = build_tree(d, m.tree_config);
  const std::string json = model_to_json(m);
  const Model back = model_from_json(json);
  EXPECT_EQ(back.tree, m.tree);
  EXPECT_EQ(back.class_order, m.class_order);
  ASSERT_EQ(back.attributes.size(), m.attributes.size());
  for (std::size_t i = 0; i < m.attributes.size(); ++i) {
    EXPECT_EQ(back.attributes[i].name, m.attributes[i].name);
    EXPECT_EQ(back.attributes[i].values, m.attributes[i].values);
  }
  EXPECT_EQ(back.tree_config.criterion, SplitCriterion::kInfoGain);
  EXPECT_EQ(back.tree_config.min_leaf_count, 3u);
  EXPECT_FALSE(back.tree_config.mean_gain_filter);
  EXPECT_EQ(back.tree_config.min_leaf_rule, MinLeafRule::kEveryBranch);
  EXPECT_DOUBLE_EQ(back.prune_config.confidence, 0.1);
  EXPECT_EQ(model_to_json(back), json);
}

TEST(ModelIo, LeafShape) {
  DecisionNode leaf;
  leaf.label = ClassLabel::kGood;
  leaf.counts[class_index(ClassLabel::kGood)] = 2;
  const std::string json = tree_to_json(leaf);
  EXPECT_NE(json.find("\"arc\": null"), std::string::npos);
  EXPECT_EQ(json.find("children"), std::string::npos);
}

TEST(ModelIo, RejectsMalformedTrees) {
  EXPECT_EQ(tree_error("{"), ErrorCode::kSchemaMismatch);
  EXPECT_EQ(tree_error("[]"), ErrorCode::kSchemaMismatch);
  EXPECT_EQ(tree_error(R"({"arc": null, "label": "Great", "counts": {}})"),
            ErrorCode::kSchemaMismatch);
  EXPECT_EQ(tree_error(R"({"arc": null, "label": "Good", "counts": {"Good": -1}})"),
            ErrorCode::kSchemaMismatch);
  EXPECT_EQ(tree_error(R"({"arc": "x", "label": "Good", "counts": {"Good": 1}})"),
            ErrorCode::kSchemaMismatch);
  EXPECT_EQ(tree_error(R"({"arc": null, "label": "Good", "counts": {"Good": 1},
                           "children": [{"arc": "v", "label": "Good",
                                         "counts": {"Good": 1}}]})"),
            ErrorCode::kSchemaMismatch);
  EXPECT_EQ(tree_error(R"({"arc": null, "label": "Good", "counts": {"Good": 1}})"),
            std::nullopt);
}

TEST(ModelIo, RejectsMalformedModels) {
  Model m;
  m.attributes = {{"A", {"x"}}};
  m.tree.label = ClassLabel::kBad;
  const std::string good = model_to_json(m);
  EXPECT_NO_THROW(model_from_json(good));
  std::string wrong_format = good;
  wrong_format.replace(wrong_format.find("lendtree-model"), 14, "other-model");
  EXPECT_THROW(model_from_json(wrong_format), Error);
  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("\"version\": 1"), 12, "\"version\": 7");
  EXPECT_THROW(model_from_json(wrong_version), Error);
  EXPECT_THROW(model_from_json("not json"), Error);
}

}  // namespace
}  // namespace lendtree
