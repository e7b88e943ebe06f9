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

#include "lendtree/pipeline.hpp"

#include <map>
#include <sstream>
#include <unordered_set>

#include "lendtree/error.hpp"
#include "lendtree/ingest.hpp"

namespace lendtree {
namespace {

template <typename F>
auto tagged(std::string_view source, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(source) + ": " + e.what());
  }
}

}  // namespace

std::string FeaturizeResult::summary() const {
  std::string out = report.to_text();
  out += "Accounts: " + std::to_string(rows.size()) + "\n";
  for (const std::string& w : warnings) out += "warning: " + w + "\n";
  return out;
}

FeaturizeResult featurize(std::istream& accounts_in, std::istream& transactions_in,
                          const PipelineConfig& config, std::string_view accounts_name,
                          std::string_view transactions_name) {
  config.validate();
  const auto accounts = tagged(accounts_name, [&] {
    return parse_accounts(accounts_in, config.delimiter);
  });
  const auto transactions = tagged(transactions_name, [&] {
    return parse_transactions(transactions_in, config.delimiter);
  });

  std::unordered_set<std::string> known;
  for (const AccountProfile& a : accounts) known.insert(a.account_no);
  for (const TransactionRecord& t : transactions) {
    if (!known.contains(t.account_no)) {
      throw Error(ErrorCode::kUnknownAccount,
                  std::string(transactions_name) +
                      ": transaction references unknown account " + t.account_no);
    }
  }

  const std::vector<AccountProfile> selected =
      select_active_window(accounts, config.account_window);
  const std::vector<TransactionRecord> kept =
      filter_transactions(transactions, config.allowed_codes, config.tx_window,
                          config.narrative_blocklist);

  std::map<std::string, std::vector<TransactionRecord>, std::less<>> by_account;
  for (const TransactionRecord& t : kept) by_account[t.account_no].push_back(t);

  FeaturizeResult result;
  result.raw.reserve(selected.size());
  for (const AccountProfile& a : selected) {
    const WindowSpec window = observation_window(*a.disburse_date, config.window_months);
    std::vector<TransactionRecord> own;
    if (auto it = by_account.find(a.account_no); it != by_account.end()) {
      for (const TransactionRecord& t : it->second) {
        if (window.contains(t.tx_date)) own.push_back(t);
      }
    }
    result.raw.push_back(aggregate_features(own, a, config.window_months));
  }

  if (result.raw.empty()) {
    result.warnings.push_back("no accounts remain after the account window filter");
  }
  if (config.filter_columns && !result.raw.empty()) {
    result.report = statistical_filter(result.raw, config.null_fraction_threshold);
    if (result.report.degenerate) {
      result.warnings.push_back("column filter input is degenerate");
    }
  } else {
    for (std::string_view c : kAttributeColumns) result.report.retained.emplace_back(c);
  }

  result.rows.reserve(result.raw.size());
  for (const RawFeatureRow& raw : result.raw) {
    const ClassLabel label = assign_class_label(row_score(raw, config.score_weights));
    result.rows.push_back(discretize_row(raw, config.schemes, label));
  }
  std::ostringstream table;
  write_discretized_table(table, result.rows, result.report.retained, config.delimiter);
  result.table = table.str();
  return result;
}

Dataset load_dataset(std::istream& in, const PipelineConfig& config) {
  return dataset_from_table(read_table(in, config.delimiter), config.columns);
}

TrainResult train(const Dataset& data, const PipelineConfig& config) {
  config.prune.validate();
  TrainResult result;
  result.model.attributes = data.attributes();
  result.model.class_order = data.class_order();
  result.model.tree_config = config.tree;
  result.model.prune_config = config.prune;
  result.model.tree =
      prune_tree(build_tree(data, config.tree), config.prune, &result.prune_log);
  result.rules = extract_rules(result.model.tree);
  result.tree_text = render_tree(result.model.tree);
  result.rules_text = render_rules(result.rules);
  std::ostringstream table;
  write_rules_table(table, result.rules, config.delimiter);
  result.rules_table = table.str();
  return result;
}

EvaluateResult evaluate(const Dataset& data, const PipelineConfig& config) {
  EvaluateResult result;
  result.report =
      cross_validate(data, config.folds, config.seed, config.tree, config.prune);
  if (data.attribute_index(kAttributeColumns[0])) {
    result.ranking = rank_sectors(data, kAttributeColumns[0]);
  }
  result.report_text = result.report.to_text();
  result.metrics_table = result.report.metrics_table(config.delimiter);
  result.sectors_table = sector_ranking_table(result.ranking, config.delimiter);
  return result;
}

PredictResult predict(const Model& model, const Table& rows,
                      const PipelineConfig& config) {
  std::vector<std::size_t> columns;
  for (const Attribute& a : model.attributes) {
    const auto c = rows.column(a.name);
    if (!c) throw Error(ErrorCode::kSchemaMismatch, "input lacks model attribute " + a.name);
    columns.push_back(*c);
  }
  const auto id_column =
      config.columns.id_column.empty() ? std::nullopt : rows.column(config.columns.id_column);

  const std::vector<Rule> rules = extract_rules(model.tree);
  std::ostringstream out;
  std::vector<std::string> header;
  if (id_column) header.push_back(rows.header[*id_column]);
  header.insert(header.end(), {"Predicted", "Rule", "Fallback"});
  write_table_row(out, header, config.delimiter);

  PredictResult result;
  for (const TableRow& row : rows.rows) {
    Instance instance;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      instance.emplace(model.attributes[i].name, row.fields[columns[i]]);
    }
    RuleMatch match;
    try {
      match = classify_with_rules(rules, instance, config.rule_fallback);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(row.line) + ": " + e.what());
    }
    std::vector<std::string> fields;
    if (id_column) fields.push_back(row.fields[*id_column]);
    fields.emplace_back(class_name(match.label));
    fields.push_back(match.rule_index ? std::to_string(*match.rule_index + 1) : "");
    fields.emplace_back(match.fallback ? "true" : "false");
    write_table_row(out, fields, config.delimiter);
    ++result.rows;
    if (match.fallback) ++result.fallbacks;
  }
  result.table = out.str();
  return result;
}

}  // namespace lendtree
