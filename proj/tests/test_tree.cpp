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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "lendtree/dataset.hpp"
#include "lendtree/error.hpp"
#include "lendtree/prune.hpp"
#include "lendtree/tree.hpp"
#include "test_util.hpp"

namespace lendtree {
namespace {

using enum ClassLabel;

// Rows given as value lists in attribute order.
Dataset make(const std::vector<std::string>& names,
             const std::vector<std::pair<std::vector<std::string>, ClassLabel>>& rows) {
  std::vector<Attribute> attributes;
  for (const std::string& n : names) attributes.push_back({n, {}});
  for (const auto& [values, label] : rows) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      auto& vs = attributes[i].values;
      if (std::find(vs.begin(), vs.end(), values[i]) == vs.end()) vs.push_back(values[i]);
    }
  }
  Dataset data(attributes);
  for (const auto& [values, label] : rows) data.add_row_values(values, label);
  return data;
}

Dataset golden_data() {
  std::istringstream in(testing::slurp(testing::data_dir() / "golden_tree.csv"));
  return dataset_from_table(read_table(in));
}

TEST(Entropy, KnownValues) {
  EXPECT_DOUBLE_EQ(entropy({2, 0, 0, 0, 2}), 1.0);
  EXPECT_EQ(entropy({0, 0, 5, 0, 0}), 0.0);
  // -(3/4)log2(3/4) - (1/4)log2(1/4), evaluated independently.
  const double expected = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25)) / std::log(2.0);
  EXPECT_NEAR(entropy({3, 0, 0, 0, 1}), expected, 1e-12);
  EXPECT_NEAR(entropy({3, 0, 0, 0, 1}), 0.811278, 1e-6);
  EXPECT_NEAR(entropy({1, 1, 1, 1, 1}), std::log2(5.0), 1e-12);
  try {
    entropy({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDistribution);
  }
}

TEST(GainRatio, PerfectBinarySplit) {
  const Dataset d = make({"A"}, {{{"x"}, kExcellent}, {{"x"}, kExcellent},
                                 {{"y"}, kBad}, {{"y"}, kBad}});
  const SplitStats s = gain_ratio(d, "A");
  EXPECT_NEAR(s.info_gain, 1.0, 1e-12);
  EXPECT_NEAR(s.split_info, 1.0, 1e-12);
  EXPECT_NEAR(s.gain_ratio, 1.0, 1e-12);
  EXPECT_TRUE(s.usable);
}

TEST(GainRatio, ConstantAttributeIsUnusable) {
  const Dataset d = make({"A"}, {{{"x"}, kExcellent}, {{"x"}, kBad}});
  const SplitStats s = gain_ratio(d, "A");
  EXPECT_EQ(s.split_info, 0.0);
  EXPECT_FALSE(s.usable);
  EXPECT_TRUE(std::isnan(s.gain_ratio));
  EXPECT_THROW(gain_ratio(d, "B"), Error);
}

TEST(GainRatio, UniqueIdentifierIsPenalised) {
  const Dataset d = make({"Id"}, {{{"1"}, kExcellent}, {{"2"}, kExcellent},
                                  {{"3"}, kBad}, {{"4"}, kBad}});
  const SplitStats s = gain_ratio(d, "Id");
  EXPECT_NEAR(s.info_gain, 1.0, 1e-12);
  EXPECT_NEAR(s.split_info, 2.0, 1e-12);
  EXPECT_NEAR(s.gain_ratio, 0.5, 1e-12);
}

TEST(ChooseAttribute, Basics) {
  const Dataset d = make({"Half", "Full", "Const"},
                         {{{"a", "p", "k"}, kExcellent},
                          {{"a", "p", "k"}, kExcellent},
                          {{"a", "q", "k"}, kBad},
                          {{"b", "q", "k"}, kBad}});
  const std::vector<std::string> all = {"Half", "Full", "Const"};
  EXPECT_EQ(choose_attribute(d, all), "Full");
  const std::vector<std::string> one = {"Half"};
  EXPECT_EQ(choose_attribute(d, one), "Half");
  const std::vector<std::string> none = {"Const"};
  EXPECT_FALSE(choose_attribute(d, none));
  const std::vector<std::string> empty;
  EXPECT_FALSE(choose_attribute(d, empty));
}

TEST(ChooseAttribute, ExactTieGoesToListOrder) {
  // B is A with its values renamed, so both score identically.
  const Dataset d = make({"A", "B"}, {{{"x", "m"}, kGood},
                                      {{"x", "m"}, kBad},
                                      {{"y", "n"}, kBad},
                                      {{"y", "n"}, kBad}});
  const std::vector<std::string> ab = {"A", "B"};
  const std::vector<std::string> ba = {"B", "A"};
  EXPECT_EQ(choose_attribute(d, ab), "A");
  EXPECT_EQ(choose_attribute(d, ba), "B");
}

TEST(ChooseAttribute, MeanGainFilterBlocksTinySplitInfo) {
  // "Rare" isolates one row: tiny gain but tiny split info, so its raw ratio
  // is highest. The prefilter keeps it out.
  const std::vector<std::string> main_values = {
      "p0", "p0", "p1", "p1", "m0", "m1", "m2", "m3", "m4", "m5",
      "p2", "p2", "m0", "m1", "m2", "m3", "m4", "m5", "m6", "m6"};
  std::vector<std::pair<std::vector<std::string>, ClassLabel>> rows;
  for (int i = 0; i < 20; ++i) {
    rows.push_back({{i == 0 ? "r" : "c", main_values[i]}, i < 10 ? kGood : kBad});
  }
  const Dataset d = make({"Rare", "Main"}, rows);
  const std::vector<std::string> both = {"Rare", "Main"};
  const SplitStats rare = gain_ratio(d, "Rare");
  const SplitStats main = gain_ratio(d, "Main");
  ASSERT_GT(rare.gain_ratio, main.gain_ratio);
  ASSERT_LT(rare.info_gain, main.info_gain);
  EXPECT_EQ(choose_attribute(d, both, {.min_leaf_count = 1}), "Main");
  EXPECT_EQ(choose_attribute(d, both, {.mean_gain_filter = false, .min_leaf_count = 1}),
            "Rare");
}

TEST(ChooseAttribute, InfoGainCriterion) {
  // Id has the larger gain, Bin the larger ratio. Noise has no gain and
  // pulls the mean below Bin.
  const Dataset d = make({"Id", "Bin", "Noise"}, {{{"1", "x", "a"}, kGood},
                                                  {{"2", "x", "a"}, kGood},
                                                  {{"3", "x", "b"}, kGood},
                                                  {{"4", "x", "b"}, kGood},
                                                  {{"5", "x", "a"}, kBad},
                                                  {{"6", "y", "a"}, kBad},
                                                  {{"7", "y", "b"}, kBad},
                                                  {{"8", "y", "b"}, kBad}});
  const std::vector<std::string> all = {"Id", "Bin", "Noise"};
  EXPECT_GT(gain_ratio(d, "Id").info_gain, gain_ratio(d, "Bin").info_gain);
  EXPECT_EQ(choose_attribute(d, all, {.min_leaf_count = 1}), "Bin");
  EXPECT_EQ(choose_attribute(d, all, {.criterion = SplitCriterion::kInfoGain,
                                      .min_leaf_count = 1}),
            "Id");
}

TEST(BuildTree, PureDataIsOneLeaf) {
  const Dataset d = make({"A"}, {{{"x"}, kGood}, {{"y"}, kGood}, {{"y"}, kGood}});
  const DecisionNode t = build_tree(d);
  EXPECT_TRUE(t.is_leaf());
  EXPECT_EQ(t.label, kGood);
  EXPECT_EQ(t.coverage(), 3u);
  EXPECT_EQ(t.misclassified(), 0u);
  EXPECT_EQ(render_tree(t), ": Good (3.0)\n\nNumber of Leaves : 1\n");
}

TEST(BuildTree, PerfectAttributeGivesStump) {
  const Dataset d = make({"Noise", "Key"}, {{{"a", "p"}, kExcellent},
                                            {{"b", "p"}, kExcellent},
                                            {{"a", "q"}, kBad},
                                            {{"b", "q"}, kBad},
                                            {{"a", "r"}, kGood},
                                            {{"b", "r"}, kGood}});
  const DecisionNode t = build_tree(d, {.min_leaf_count = 1});
  EXPECT_EQ(t.attribute, "Key");
  ASSERT_EQ(t.children.size(), 3u);
  EXPECT_EQ(tree_depth(t), 1u);
  EXPECT_EQ(render_tree(t),
            "Key = p: Excellent (2.0)\nKey = q: Bad (2.0)\nKey = r: Good (2.0)\n"
            "\nNumber of Leaves : 3\n");
}

TEST(BuildTree, EmptyPartitionTakesParentMajority) {
  Dataset d(std::vector<Attribute>{{"A", {"x", "y", "z"}}, {"B", {"m", "n"}}});
  const std::vector<std::string> r1 = {"x", "m"};
  const std::vector<std::string> r2 = {"y", "n"};
  const std::vector<std::string> r3 = {"y", "m"};
  d.add_row_values(r1, kGood);
  d.add_row_values(r1, kGood);
  d.add_row_values(r2, kBad);
  d.add_row_values(r3, kBad);
  const DecisionNode t = build_tree(d, {.min_leaf_count = 1});
  ASSERT_EQ(t.attribute, "A");
  ASSERT_EQ(t.children.size(), 3u);
  const DecisionNode& z = t.children[2];
  EXPECT_EQ(z.arc, "z");
  EXPECT_TRUE(z.is_leaf());
  EXPECT_EQ(z.coverage(), 0u);
  EXPECT_EQ(z.label, t.label);
}

TEST(BuildTree, AttributesExhaustedUsesMajority) {
  const Dataset d = make({"A"}, {{{"x"}, kGood}, {{"x"}, kGood}, {{"x"}, kBad}});
  const DecisionNode t = build_tree(d);
  EXPECT_TRUE(t.is_leaf());
  EXPECT_EQ(t.label, kGood);
  EXPECT_EQ(t.misclassified(), 1u);
}

TEST(BuildTree, MinLeafRules) {
  // One branch of three holds a single row.
  const Dataset d = make({"A"}, {{{"x"}, kGood},
                                 {{"x"}, kGood},
                                 {{"y"}, kBad},
                                 {{"y"}, kBad},
                                 {{"z"}, kMarginal}});
  EXPECT_FALSE(build_tree(d, {.min_leaf_count = 2}).is_leaf());
  EXPECT_TRUE(build_tree(d, {.min_leaf_count = 2,
                             .min_leaf_rule = MinLeafRule::kEveryBranch})
                  .is_leaf());
  EXPECT_TRUE(build_tree(d, {.min_leaf_count = 3}).is_leaf());
  EXPECT_THROW(build_tree(d, {.min_leaf_count = 0}), Error);
}

TEST(BuildTree, EmptyDatasetThrows) {
  Dataset d(std::vector<Attribute>{{"A", {"x"}}});
  try {
    build_tree(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDataset);
  }
}

TEST(BuildTree, AttributeSubsetAndParentArc) {
  const Dataset d = make({"A", "B"}, {{{"x", "m"}, kGood},
                                      {{"x", "n"}, kBad},
                                      {{"y", "m"}, kGood},
                                      {{"y", "n"}, kBad}});
  const std::vector<std::string> only_a = {"A"};
  const DecisionNode t = build_tree(d, only_a, "parent", {.min_leaf_count = 1});
  EXPECT_EQ(t.arc, "parent");
  EXPECT_EQ(t.attribute, "A");
  const std::vector<std::string> unknown = {"C"};
  EXPECT_THROW(build_tree(d, unknown, std::nullopt, {}), Error);
}

TEST(GoldenTree, GoldenRender) {
  const Dataset d = golden_data();
  ASSERT_EQ(d.size(), 40u);
  const DecisionNode tree = prune_tree(build_tree(d, {}), PruneConfig{});
  const std::string text = render_tree(tree);
  EXPECT_EQ(text, testing::slurp(testing::data_dir() / "golden_tree.txt"));
  EXPECT_EQ(tree.attribute, "maxCrAmount");
  EXPECT_EQ(leaf_count(tree), 15u);
  EXPECT_NE(text.find("maxCrAmount = LessEqual75: Excellent (7.0/2.0)\n"), std::string::npos);
}

TEST(GoldenTree, PruningLeavesItUnchanged) {
  const Dataset d = golden_data();
  const DecisionNode grown = build_tree(d, {});
  EXPECT_EQ(prune_tree(grown, PruneConfig{}), grown);
}

TEST(GoldenTree, Classify) {
  const DecisionNode tree = build_tree(golden_data(), {});
  Instance row{{"Sector", "Other"},
               {"maxCrAmount", "LessEqual75"},
               {"totalDrAmount", "LessEqual100"},
               {"PrincipalAmount", "LessEqual50"}};
  const Classification c = classify(tree, row);
  EXPECT_EQ(c.label, kExcellent);
  EXPECT_EQ(c.path, (std::vector<Condition>{{"maxCrAmount", "LessEqual75"}}));
  EXPECT_FALSE(c.fallback);

  row["maxCrAmount"] = "Above75";
  row["Sector"] = "BusinessmanIndustrialist";
  EXPECT_EQ(classify(tree, row).label, kGood);
}

TEST(Classify, UnseenValueAndMissingAttribute) {
  const DecisionNode tree = build_tree(golden_data(), {});
  Instance row{{"Sector", "Textiles"}, {"maxCrAmount", "Above75"}};
  const Classification c = classify(tree, row);
  EXPECT_TRUE(c.fallback);
  EXPECT_EQ(c.label, tree.children[0].label);
  EXPECT_EQ(c.path.size(), 1u);
  try {
    classify(tree, row, UnseenValuePolicy::kError);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoMatch);
  }
  Instance missing{{"Sector", "Other"}};
  try {
    classify(tree, missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingAttributeValue);
  }
}

TEST(Classify, SingleLeafIgnoresRow) {
  DecisionNode leaf;
  leaf.label = kMarginal;
  EXPECT_EQ(classify(leaf, {}).label, kMarginal);
  EXPECT_EQ(leaf_count(leaf), 1u);
  EXPECT_EQ(tree_depth(leaf), 0u);
  EXPECT_EQ(node_count(leaf), 1u);
}

TEST(Dataset, FromTableOrdersAndErrors) {
  const Table t = testing::table_from(
      "AccountNo,Colour,Class_Label\n1,red,Good\n2,blue,Very Good\n3,red,Bad\n");
  const Dataset d = dataset_from_table(t);
  ASSERT_EQ(d.num_attributes(), 1u);
  EXPECT_EQ(d.attributes()[0].values, (std::vector<std::string>{"red", "blue"}));
  EXPECT_EQ(d.class_order()[0], kGood);
  EXPECT_EQ(d.class_order()[1], kVeryGood);
  EXPECT_EQ(d.class_order()[2], kBad);
  EXPECT_EQ(d.id(1), "2");
  EXPECT_EQ(d.label(1), kVeryGood);

  try {
    dataset_from_table(testing::table_from("AccountNo,Colour\n1,red\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaMismatch);
  }
  EXPECT_THROW(dataset_from_table(testing::table_from("Colour,Class_Label\nred,Great\n")),
               MalformedRowError);
  EXPECT_THROW(dataset_from_table(testing::table_from("Colour,Class_Label\n,Good\n")),
               MalformedRowError);
}

TEST(Dataset, RowValidation) {
  Dataset d(std::vector<Attribute>{{"A", {"x", "y"}}});
  const std::vector<std::string> bad = {"z"};
  EXPECT_THROW(d.add_row_values(bad, kGood), Error);
  const std::vector<std::uint32_t> code = {2};
  EXPECT_THROW(d.add_row(code, kGood), Error);
  EXPECT_THROW(Dataset({{"A", {"x"}}, {"A", {"y"}}}), Error);
}

}  // namespace
}  // namespace lendtree
