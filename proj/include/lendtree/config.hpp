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

// Pipeline configuration, read from a plain key=value file.
//
//   # comment
//   delimiter = ,
//   tx_window.from = 2013-01-01
//   bins.amount4 = 25:LessEqual25,50:LessEqual50,75:LessEqual75,inf:Above75
//   score.weight.repayment = 0.4
//   tree.criterion = gain-ratio
//
// See PipelineConfig::set for the full key list.

#ifndef LENDTREE_CONFIG_HPP_
#define LENDTREE_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lendtree/dataset.hpp"
#include "lendtree/features.hpp"
#include "lendtree/ingest.hpp"
#include "lendtree/prune.hpp"
#include "lendtree/synth.hpp"
#include "lendtree/tree.hpp"

namespace lendtree {

struct PipelineConfig {
  char delimiter = ',';
  // Accounts disbursed in this window are analysed.
  WindowSpec account_window{
      Date{std::chrono::year{2013}, std::chrono::January, std::chrono::day{1}},
      Date{std::chrono::year{2013}, std::chrono::December,
           std::chrono::day{31}}};
  // Transactions outside this window are ignored.
  WindowSpec tx_window{
      Date{std::chrono::year{2013}, std::chrono::January, std::chrono::day{1}},
      Date{std::chrono::year{2014}, std::chrono::June, std::chrono::day{30}}};
  int window_months = 6;
  std::set<int> allowed_codes = default_allowed_codes();
  std::vector<std::string> narrative_blocklist = default_narrative_blocklist();

  bool filter_columns = true;
  double null_fraction_threshold = 0.09;
  FeatureSchemes schemes;
  ScoreWeights score_weights = default_score_weights();

  DatasetColumns columns;
  TreeConfig tree;
  UnseenValuePolicy unseen_value = UnseenValuePolicy::kSubtreeMajority;
  PruneConfig prune;
  bool rule_fallback = true;

  std::size_t folds = 10;
  std::uint64_t seed = 1;

  SynthProfile synth = SynthProfile::defaults();
  std::size_t synth_accounts = 200;

  // Throws InvalidConfig for an unknown key or an unparseable value.
  void set(std::string_view key, std::string_view value);

  // Range checks across fields; throws InvalidConfig.
  void validate() const;

  // Canonical key=value listing that reloads to an equal configuration.
  std::string to_text() const;
};

// Ordered (key, value) pairs; '#' starts a comment, blank lines are skipped.
// Throws InvalidConfig naming the line for a line without '='.
std::vector<std::pair<std::string, std::string>> parse_key_values(
    std::istream& in);

PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace lendtree

#endif  // LENDTREE_CONFIG_HPP_
