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

#include "lendtree/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "lendtree/error.hpp"
#include "lendtree/rules.hpp"
#include "lendtree/table.hpp"
#include "random.hpp"

namespace lendtree {
namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  for (std::size_t a = 0; a < kNumClasses; ++a) {
    for (std::size_t p = 0; p < kNumClasses; ++p) cells_[a][p] += other.cells_[a][p];
  }
}

std::size_t ConfusionMatrix::total() const noexcept {
  std::size_t n = 0;
  for (const auto& row : cells_) {
    for (std::size_t c : row) n += c;
  }
  return n;
}

std::size_t ConfusionMatrix::correct() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < kNumClasses; ++i) n += cells_[i][i];
  return n;
}

double ConfusionMatrix::accuracy() const noexcept {
  const std::size_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(correct()) / n;
}

std::string ConfusionMatrix::to_text() const {
  std::ostringstream out;
  char buf[32];
  for (std::size_t p = 0; p < kNumClasses; ++p) {
    std::snprintf(buf, sizeof buf, "%6c", static_cast<char>('a' + p));
    out << buf;
  }
  out << "   <-- classified as\n";
  for (std::size_t a = 0; a < kNumClasses; ++a) {
    for (std::size_t p = 0; p < kNumClasses; ++p) {
      std::snprintf(buf, sizeof buf, "%6zu", cells_[a][p]);
      out << buf;
    }
    out << " |   " << static_cast<char>('a' + a) << " = "
        << class_display_name(kAllClasses[a]) << '\n';
  }
  return out.str();
}

std::vector<Fold> stratified_kfold(const Dataset& data, std::size_t k,
                                   std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 folds");
  if (data.size() < k) {
    throw Error(ErrorCode::kTooFewRows, std::to_string(data.size()) +
                                            " rows cannot fill " +
                                            std::to_string(k) + " folds");
  }
  detail::Rng rng(seed);
  std::vector<std::size_t> dealt;
  dealt.reserve(data.size());
  for (ClassLabel label : kAllClasses) {
    std::vector<std::size_t> members;
    for (std::size_t r = 0; r < data.size(); ++r) {
      if (data.label(r) == label) members.push_back(r);
    }
    rng.shuffle(members);
    dealt.insert(dealt.end(), members.begin(), members.end());
  }
  std::vector<std::size_t> fold_of(data.size());
  for (std::size_t pos = 0; pos < dealt.size(); ++pos) fold_of[dealt[pos]] = pos % k;

  std::vector<Fold> folds(k);
  for (std::size_t r = 0; r < data.size(); ++r) {
    for (std::size_t f = 0; f < k; ++f) {
      (fold_of[r] == f ? folds[f].test : folds[f].train).push_back(r);
    }
  }
  return folds;
}

EvaluationReport cross_validate(const Dataset& data, std::size_t k,
                                std::uint64_t seed, const TreeConfig& tree_config,
                                const PruneConfig& prune_config) {
  prune_config.validate();
  EvaluationReport report;
  report.folds = k;
  report.seed = seed;
  for (const Fold& fold : stratified_kfold(data, k, seed)) {
    const DecisionNode tree =
        prune_tree(build_tree(data, fold.train, tree_config), prune_config);
    ConfusionMatrix confusion;
    for (std::size_t r : fold.test) {
      confusion.add(data.label(r), classify(tree, data.instance(r)).label);
    }
    report.fold_accuracy.push_back(confusion.accuracy());
    report.confusion.merge(confusion);
  }
  double sum = 0.0;
  for (double a : report.fold_accuracy) sum += a;
  report.mean_accuracy = sum / report.fold_accuracy.size();

  report.final_tree = prune_tree(build_tree(data, tree_config), prune_config);
  report.leaf_count = leaf_count(report.final_tree);
  report.depth = tree_depth(report.final_tree);
  report.rule_count = extract_rules(report.final_tree).size();
  return report;
}

std::string EvaluationReport::to_text() const {
  std::ostringstream out;
  out << "Pruned tree\n------------------\n\n" << render_tree(final_tree) << '\n';
  out << "=== Stratified cross-validation (" << folds << " folds, seed " << seed
      << ") ===\n\n";
  const std::size_t n = confusion.total();
  const std::size_t ok = confusion.correct();
  const double pct = n == 0 ? 0.0 : 100.0 * ok / n;
  out << "Correctly Classified Instances    " << ok << "   " << fixed(pct, 4) << " %\n";
  out << "Incorrectly Classified Instances  " << n - ok << "   "
      << fixed(n == 0 ? 0.0 : 100.0 - pct, 4) << " %\n";
  out << "Total Number of Instances         " << n << '\n';
  out << "Mean fold accuracy                " << fixed(mean_accuracy, 6) << '\n';
  out << "Fold accuracies                  ";
  for (double a : fold_accuracy) out << ' ' << fixed(a, 4);
  out << "\n\nLeaves: " << leaf_count << "  Depth: " << depth << "  Rules: " << rule_count
      << "\n\n=== Confusion Matrix ===\n\n"
      << confusion.to_text();
  return out.str();
}

std::string EvaluationReport::metrics_table(char delimiter) const {
  std::ostringstream out;
  auto row = [&](const std::string& metric, const std::string& value) {
    write_table_row(out, {metric, value}, delimiter);
  };
  row("metric", "value");
  row("folds", std::to_string(folds));
  row("seed", std::to_string(seed));
  row("mean_accuracy", fixed(mean_accuracy, 6));
  row("pooled_accuracy", fixed(confusion.accuracy(), 6));
  row("correct", std::to_string(confusion.correct()));
  row("total", std::to_string(confusion.total()));
  row("leaves", std::to_string(leaf_count));
  row("depth", std::to_string(depth));
  row("rules", std::to_string(rule_count));
  for (std::size_t i = 0; i < fold_accuracy.size(); ++i) {
    row("fold_" + std::to_string(i + 1) + "_accuracy", fixed(fold_accuracy[i], 6));
  }
  return out.str();
}

SectorRanking rank_sectors(std::span<const std::pair<std::string, ClassLabel>> rows) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyDataset, "no rows to rank sectors");
  std::map<std::string, ClassCounts> by_sector;
  for (const auto& [sector, label] : rows) ++by_sector[sector][class_index(label)];

  SectorRanking ranking;
  for (const auto& [sector, counts] : by_sector) {
    SectorScore s;
    s.sector = sector;
    s.counts = counts;
    const double n = static_cast<double>(total(counts));
    double sum = 0.0;
    for (ClassLabel l : kAllClasses) sum += ordinal_rank(l) * counts[class_index(l)];
    s.mean_score = sum / n;
    s.excellent_share = counts[class_index(ClassLabel::kExcellent)] / n;
    ranking.push_back(std::move(s));
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const SectorScore& a, const SectorScore& b) {
                     if (std::abs(a.mean_score - b.mean_score) > 1e-12) {
                       return a.mean_score > b.mean_score;
                     }
                     if (std::abs(a.excellent_share - b.excellent_share) > 1e-12) {
                       return a.excellent_share > b.excellent_share;
                     }
                     return a.sector < b.sector;
                   });
  for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i].rank = i + 1;
  return ranking;
}

SectorRanking rank_sectors(std::span<const DiscretizedRow> rows) {
  std::vector<std::pair<std::string, ClassLabel>> pairs;
  pairs.reserve(rows.size());
  for (const DiscretizedRow& r : rows) pairs.emplace_back(r.sector, r.class_label);
  return rank_sectors(pairs);
}

SectorRanking rank_sectors(const Dataset& data, std::string_view sector_attribute) {
  const auto index = data.attribute_index(sector_attribute);
  if (!index) {
    throw Error(ErrorCode::kUnknownAttribute,
                "no sector attribute " + std::string(sector_attribute));
  }
  std::vector<std::pair<std::string, ClassLabel>> pairs;
  pairs.reserve(data.size());
  for (std::size_t r = 0; r < data.size(); ++r) {
    pairs.emplace_back(data.value(r, *index), data.label(r));
  }
  return rank_sectors(pairs);
}

std::string sector_ranking_table(const SectorRanking& ranking, char delimiter) {
  std::ostringstream out;
  std::vector<std::string> header{"rank", "sector", "rows"};
  for (ClassLabel l : kAllClasses) header.emplace_back(class_name(l));
  header.push_back("mean_score");
  header.push_back("excellent_share");
  write_table_row(out, header, delimiter);
  for (const SectorScore& s : ranking) {
    std::vector<std::string> row{std::to_string(s.rank), s.sector,
                                 std::to_string(total(s.counts))};
    for (std::size_t c : s.counts) row.push_back(std::to_string(c));
    row.push_back(fixed(s.mean_score, 6));
    row.push_back(fixed(s.excellent_share, 6));
    write_table_row(out, row, delimiter);
  }
  return out.str();
}

}  // namespace lendtree
