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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lendtree/error.hpp"
#include "lendtree/eval.hpp"
#include "test_util.hpp"

namespace lendtree {
namespace {

using enum ClassLabel;

Dataset labelled(const std::vector<ClassLabel>& labels) {
  Dataset d(std::vector<Attribute>{{"A", {"x", "y"}}});
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::vector<std::uint32_t> code = {static_cast<std::uint32_t>(i % 2)};
    d.add_row(code, labels[i]);
  }
  return d;
}

TEST(ConfusionMatrix, Counts) {
  ConfusionMatrix m;
  EXPECT_EQ(m.accuracy(), 0.0);
  m.add(kGood, kGood, 3);
  m.add(kGood, kBad);
  m.add(kBad, kBad);
  EXPECT_EQ(m.total(), 5u);
  EXPECT_EQ(m.correct(), 4u);
  EXPECT_DOUBLE_EQ(m.accuracy(), 0.8);
  ConfusionMatrix other;
  other.add(kExcellent, kGood);
  m.merge(other);
  EXPECT_EQ(m.count(kExcellent, kGood), 1u);
  EXPECT_EQ(m.total(), 6u);
  EXPECT_NE(m.to_text().find("c = Good"), std::string::npos);
}

TEST(StratifiedKFold, PartitionsAndBalances) {
  std::vector<ClassLabel> labels;
  for (int i = 0; i < 23; ++i) labels.push_back(kGood);
  for (int i = 0; i < 7; ++i) labels.push_back(kBad);
  for (int i = 0; i < 11; ++i) labels.push_back(kExcellent);
  const Dataset d = labelled(labels);
  const auto folds = stratified_kfold(d, 5, 42);
  ASSERT_EQ(folds.size(), 5u);
  std::vector<int> seen(d.size(), 0);
  for (const Fold& f : folds) {
    EXPECT_TRUE(std::is_sorted(f.test.begin(), f.test.end()));
    EXPECT_EQ(f.train.size() + f.test.size(), d.size());
    for (std::size_t r : f.test) ++seen[r];
    std::set<std::size_t> train(f.train.begin(), f.train.end());
    for (std::size_t r : f.test) EXPECT_FALSE(train.contains(r));
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  for (ClassLabel c : {kGood, kBad, kExcellent}) {
    std::size_t lo = d.size();
    std::size_t hi = 0;
    for (const Fold& f : folds) {
      const std::size_t n = d.class_counts(f.test)[class_index(c)];
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    EXPECT_LE(hi - lo, 1u) << class_name(c);
  }
  std::size_t lo = d.size();
  std::size_t hi = 0;
  for (const Fold& f : folds) {
    lo = std::min(lo, f.test.size());
    hi = std::max(hi, f.test.size());
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST(StratifiedKFold, SeedDeterminism) {
  std::vector<ClassLabel> labels(50, kGood);
  for (std::size_t i = 0; i < 20; ++i) labels[i] = kBad;
  const Dataset d = labelled(labels);
  const auto a = stratified_kfold(d, 10, 7);
  const auto b = stratified_kfold(d, 10, 7);
  const auto c = stratified_kfold(d, 10, 8);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].test, b[i].test);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].test != c[i].test;
  EXPECT_TRUE(differs);
}

TEST(StratifiedKFold, Errors) {
  const Dataset d = labelled({kGood, kBad, kGood});
  try {
    stratified_kfold(d, 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewRows);
  }
  EXPECT_THROW(stratified_kfold(d, 1, 1), Error);
  EXPECT_NO_THROW(stratified_kfold(d, 3, 1));
}

Dataset separable(std::size_t per_class) {
  Dataset d(std::vector<Attribute>{{"Key", {"k0", "k1", "k2", "k3", "k4"}}, {"Noise", {"n0", "n1", "n2"}}});
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < per_class * kNumClasses; ++i) {
    const std::uint32_t c = static_cast<std::uint32_t>(i % kNumClasses);
    const std::vector<std::uint32_t> codes = {c, static_cast<std::uint32_t>(rng() % 3)};
    d.add_row(codes, kAllClasses[c]);
  }
  return d;
}

TEST(CrossValidate, SeparableIsPerfect) {
  const EvaluationReport r = cross_validate(separable(20), 10, 1, {}, {});
  EXPECT_EQ(r.fold_accuracy.size(), 10u);
  EXPECT_DOUBLE_EQ(r.mean_accuracy, 1.0);
  EXPECT_EQ(r.confusion.total(), 100u);
  EXPECT_EQ(r.leaf_count, 5u);
  EXPECT_EQ(r.rule_count, 5u);
  EXPECT_EQ(r.depth, 1u);
  EXPECT_EQ(r.final_tree.attribute, "Key");
}

TEST(CrossValidate, AccuracyTwoWays) {
  std::mt19937_64 rng(11);
  testing::RandomSpec spec{.max_attributes = 4, .max_values = 3, .max_rows = 80,
                           .min_rows = 40, .classes = 3};
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = testing::random_dataset(rng, spec);
    const auto folds = stratified_kfold(d, 5, trial);
    const EvaluationReport r = cross_validate(d, 5, trial, {}, {});
    double mean = 0.0;
    std::size_t pooled = 0;
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const DecisionNode t = prune_tree(build_tree(d, folds[f].train, {}), {});
      std::size_t hits = 0;
      for (std::size_t row : folds[f].test) {
        hits += classify(t, d.instance(row)).label == d.label(row);
      }
      EXPECT_DOUBLE_EQ(r.fold_accuracy[f], static_cast<double>(hits) / folds[f].test.size());
      mean += static_cast<double>(hits) / folds[f].test.size();
      pooled += hits;
    }
    EXPECT_NEAR(r.mean_accuracy, mean / folds.size(), 1e-12);
    EXPECT_EQ(r.confusion.correct(), pooled);
    EXPECT_EQ(r.confusion.total(), d.size());
  }
}

TEST(CrossValidate, ReportsAreDeterministic) {
  const Dataset d = separable(10);
  const EvaluationReport a = cross_validate(d, 5, 9, {}, {});
  const EvaluationReport b = cross_validate(d, 5, 9, {}, {});
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.metrics_table(), b.metrics_table());
  const std::string metrics = a.metrics_table();
  EXPECT_EQ(metrics.rfind("metric,value\nfolds,5\nseed,9\nmean_accuracy,1.000000\n", 0), 0u);
  EXPECT_NE(metrics.find("fold_5_accuracy,1.000000\n"), std::string::npos);
  EXPECT_NE(a.to_text().find("Number of Leaves : 5"), std::string::npos);
}

TEST(RankSectors, OrderAndTies) {
  const std::vector<std::pair<std::string, ClassLabel>> rows = {
      {"Other", kBad},           {"Other", kGood},
      {"Rice", kExcellent},      {"Rice", kVeryGood},
      {"Retail", kGood},         {"Retail", kGood},
      {"Whole", kExcellent},     {"Whole", kMarginal},
      {"Alpha", kGood},          {"Alpha", kGood}};
  const SectorRanking r = rank_sectors(rows);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(r[0].sector, "Rice");  // mean 4.5
  EXPECT_EQ(r[1].sector, "Whole");  // mean 3.5
  // Alpha and Retail tie on mean and share; names break the tie.
  EXPECT_EQ(r[2].sector, "Alpha");
  EXPECT_EQ(r[3].sector, "Retail");
  EXPECT_EQ(r[4].sector, "Other");
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i].rank, i + 1);
  EXPECT_DOUBLE_EQ(r[0].mean_score, 4.5);
  EXPECT_DOUBLE_EQ(r[0].excellent_share, 0.5);
}

TEST(RankSectors, ExcellentShareBreaksMeanTie) {
  const std::vector<std::pair<std::string, ClassLabel>> rows = {
      {"B", kGood}, {"B", kGood}, {"A", kExcellent}, {"A", kBad}};
  const SectorRanking r = rank_sectors(rows);
  EXPECT_EQ(r[0].sector, "A");
}

TEST(RankSectors, DatasetAndErrors) {
  Dataset d(std::vector<Attribute>{{"Sector", {"S1", "S2"}}});
  const std::vector<std::string> s1 = {"S1"};
  const std::vector<std::string> s2 = {"S2"};
  d.add_row_values(s1, kBad);
  d.add_row_values(s2, kExcellent);
  EXPECT_EQ(rank_sectors(d).front().sector, "S2");
  EXPECT_THROW(rank_sectors(d, "Region"), Error);
  EXPECT_THROW(rank_sectors(std::vector<std::pair<std::string, ClassLabel>>{}), Error);
  const std::string table = sector_ranking_table(rank_sectors(d));
  EXPECT_EQ(table,
            "rank,sector,rows,Excellent,VeryGood,Good,Marginal,Bad,mean_score,"
            "excellent_share\n"
            "1,S2,1,1,0,0,0,0,5.000000,1.000000\n"
            "2,S1,1,0,0,0,0,1,1.000000,0.000000\n");
}

}  // namespace
}  // namespace lendtree
