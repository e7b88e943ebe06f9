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

// End-to-end stages shared by the C API and in-process callers.

#ifndef LENDTREE_PIPELINE_HPP_
#define LENDTREE_PIPELINE_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lendtree/config.hpp"
#include "lendtree/dataset.hpp"
#include "lendtree/eval.hpp"
#include "lendtree/features.hpp"
#include "lendtree/model_io.hpp"
#include "lendtree/prune.hpp"
#include "lendtree/rules.hpp"
#include "lendtree/table.hpp"

namespace lendtree {

struct FeaturizeResult {
  std::vector<RawFeatureRow> raw;
  std::vector<DiscretizedRow> rows;
  FilterReport report;
  std::vector<std::string> warnings;
  std::string table;  // discretized table text

  // Filter report plus warnings, as printed by the CLI.
  std::string summary() const;
};

// Parse, select, filter, aggregate, grade and discretize. The source names
// prefix parse diagnostics.
FeaturizeResult featurize(std::istream& accounts, std::istream& transactions,
                          const PipelineConfig& config,
                          std::string_view accounts_name = "accounts",
                          std::string_view transactions_name = "transactions");

Dataset load_dataset(std::istream& in, const PipelineConfig& config);

struct TrainResult {
  Model model;
  std::vector<Rule> rules;
  std::vector<PruneDecision> prune_log;
  std::string tree_text;
  std::string rules_text;
  std::string rules_table;
};

TrainResult train(const Dataset& data, const PipelineConfig& config);

struct EvaluateResult {
  EvaluationReport report;
  SectorRanking ranking;  // empty when the data has no Sector attribute
  std::string report_text;
  std::string metrics_table;
  std::string sectors_table;
};

EvaluateResult evaluate(const Dataset& data, const PipelineConfig& config);

struct PredictResult {
  std::string table;  // AccountNo (when present), Predicted, Rule, Fallback
  std::size_t rows = 0;
  std::size_t fallbacks = 0;
};

// Every model attribute must be a column of `rows` (SchemaMismatch
// otherwise). Rule indices are 1-based.
PredictResult predict(const Model& model, const Table& rows,
                      const PipelineConfig& config);

}  // namespace lendtree

#endif  // LENDTREE_PIPELINE_HPP_
