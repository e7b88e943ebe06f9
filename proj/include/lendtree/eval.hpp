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

// Cross-validation, confusion matrices and sector ranking.

#ifndef LENDTREE_EVAL_HPP_
#define LENDTREE_EVAL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lendtree/class_label.hpp"
#include "lendtree/dataset.hpp"
#include "lendtree/features.hpp"
#include "lendtree/prune.hpp"
#include "lendtree/tree.hpp"

namespace lendtree {

class ConfusionMatrix {
 public:
  void add(ClassLabel actual, ClassLabel predicted, std::size_t n = 1) {
    cells_[class_index(actual)][class_index(predicted)] += n;
  }
  void merge(const ConfusionMatrix& other);

  std::size_t count(ClassLabel actual, ClassLabel predicted) const {
    return cells_[class_index(actual)][class_index(predicted)];
  }
  std::size_t total() const noexcept;
  std::size_t correct() const noexcept;
  // Diagonal share; 0 for an empty matrix.
  double accuracy() const noexcept;

  std::string to_text() const;

 private:
  std::array<std::array<std::size_t, kNumClasses>, kNumClasses> cells_{};
};

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Rows are shuffled within each class (Fisher-Yates driven by mt19937_64),
// then dealt round-robin over the folds class by class, so fold sizes and
// per-class counts each differ by at most one. Test indices are sorted.
// Throws InvalidArgument for k < 2 and TooFewRows when rows < k.
std::vector<Fold> stratified_kfold(const Dataset& data, std::size_t k,
                                   std::uint64_t seed);

struct EvaluationReport {
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;
  ConfusionMatrix confusion;  // pooled over test folds
  DecisionNode final_tree;    // built and pruned on all rows
  std::size_t leaf_count = 0;
  std::size_t depth = 0;
  std::size_t rule_count = 0;

  // Rendered final tree followed by the accuracy block.
  std::string to_text() const;
  // Delimited metric,value table with one row per fold accuracy.
  std::string metrics_table(char delimiter = ',') const;
};

EvaluationReport cross_validate(const Dataset& data, std::size_t k,
                                std::uint64_t seed,
                                const TreeConfig& tree_config,
                                const PruneConfig& prune_config);

struct SectorScore {
  std::string sector;
  ClassCounts counts{};
  double mean_score = 0.0;  // mean ordinal rank, Excellent=5 .. Bad=1
  double excellent_share = 0.0;
  std::size_t rank = 0;  // 1-based
};

using SectorRanking = std::vector<SectorScore>;

// Descending by mean score, then Excellent share, then sector name.
// Throws EmptyDataset for no rows.
SectorRanking rank_sectors(
    std::span<const std::pair<std::string, ClassLabel>> rows);
SectorRanking rank_sectors(std::span<const DiscretizedRow> rows);
SectorRanking rank_sectors(const Dataset& data,
                           std::string_view sector_attribute = "Sector");

std::string sector_ranking_table(const SectorRanking& ranking,
                                 char delimiter = ',');

}  // namespace lendtree

#endif  // LENDTREE_EVAL_HPP_
