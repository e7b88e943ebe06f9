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

#include "lendtree/lendtree.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "lendtree/config.hpp"
#include "lendtree/error.hpp"
#include "lendtree/model_io.hpp"
#include "lendtree/pipeline.hpp"
#include "lendtree/synth.hpp"
#include "lendtree/table.hpp"

struct lt_config {
  lendtree::PipelineConfig value;
};

struct lt_dataset {
  lendtree::Dataset value;
};

struct lt_model {
  lendtree::Model value;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
lt_status guarded(F&& body) noexcept {
  g_last_error.clear();
  try {
    body();
    return LT_OK;
  } catch (const lendtree::Error& e) {
    g_last_error = e.what();
    return static_cast<lt_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LT_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LT_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return LT_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) {
    throw lendtree::Error(lendtree::ErrorCode::kInvalidArgument,
                          std::string(what) + " is null");
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::ifstream open_input(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw lendtree::Error(lendtree::ErrorCode::kIo,
                          std::string("cannot open ") + path);
  }
  return in;
}

// Prefixes row-level diagnostics with the file they came from.
template <typename F>
auto with_file(const char* path, F&& body) {
  try {
    return body();
  } catch (const lendtree::Error& e) {
    throw lendtree::Error(e.code(), std::string(path) + ": " + e.what());
  }
}

}  // namespace

extern "C" {

const char* lt_version(void) { return "0.1.0"; }

const char* lt_last_error(void) { return g_last_error.c_str(); }

const char* lt_status_name(lt_status status) {
  if (status == LT_OK) return "Ok";
  const auto name = lendtree::error_code_name(static_cast<lendtree::ErrorCode>(status));
  return name.data();
}

void lt_string_free(char* text) { std::free(text); }

lt_status lt_config_new(lt_config** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = new lt_config{};
  });
}

lt_status lt_config_load(const char* path, lt_config** out) {
  return guarded([&] {
    require(path != nullptr, "path");
    require(out != nullptr, "out");
    *out = new lt_config{lendtree::load_config(path)};
  });
}

lt_status lt_config_set(lt_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(key != nullptr, "key");
    require(value != nullptr, "value");
    lendtree::PipelineConfig next = config->value;
    next.set(key, value);
    config->value = std::move(next);
  });
}

lt_status lt_config_dump(const lt_config* config, char** out_text) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(out_text != nullptr, "out_text");
    *out_text = duplicate(config->value.to_text());
  });
}

void lt_config_free(lt_config* config) { delete config; }

lt_status lt_synth(const lt_config* config, size_t n, const char* accounts_path,
                   const char* transactions_path) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(accounts_path != nullptr, "accounts_path");
    require(transactions_path != nullptr, "transactions_path");
    const lendtree::PipelineConfig& cfg = config->value;
    const lendtree::SynthData data = lendtree::generate_synthetic(cfg.synth, cfg.seed, n == 0 ? cfg.synth_accounts : n);
    std::ostringstream accounts;
    lendtree::write_accounts_table(accounts, data.accounts, cfg.delimiter);
    std::ostringstream transactions;
    lendtree::write_transactions_table(transactions, data.transactions,
                                       data.missing_amounts, cfg.delimiter);
    lendtree::write_file_atomic(accounts_path, accounts.str());
    lendtree::write_file_atomic(transactions_path, transactions.str());
  });
}

lt_status lt_featurize(const lt_config* config, const char* accounts_path,
                       const char* transactions_path, const char* out_path,
                       char** out_summary) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(accounts_path != nullptr, "accounts_path");
    require(transactions_path != nullptr, "transactions_path");
    require(out_path != nullptr, "out_path");
    std::ifstream accounts = open_input(accounts_path);
    std::ifstream transactions = open_input(transactions_path);
    const lendtree::FeaturizeResult result =
        lendtree::featurize(accounts, transactions, config->value, accounts_path,
                            transactions_path);
    lendtree::write_file_atomic(out_path, result.table);
    if (out_summary != nullptr) *out_summary = duplicate(result.summary());
  });
}

lt_status lt_dataset_load(const lt_config* config, const char* path, lt_dataset** out) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(path != nullptr, "path");
    require(out != nullptr, "out");
    std::ifstream in = open_input(path);
    lendtree::Dataset data =
        with_file(path, [&] { return lendtree::load_dataset(in, config->value); });
    *out = new lt_dataset{std::move(data)};
  });
}

size_t lt_dataset_rows(const lt_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->value.size();
}

size_t lt_dataset_attributes(const lt_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->value.num_attributes();
}

void lt_dataset_free(lt_dataset* dataset) { delete dataset; }

lt_status lt_train(const lt_config* config, const lt_dataset* dataset, lt_model** out) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(dataset != nullptr, "dataset");
    require(out != nullptr, "out");
    lendtree::TrainResult result = lendtree::train(dataset->value, config->value);
    *out = new lt_model{std::move(result.model)};
  });
}

lt_status lt_model_save(const lt_model* model, const char* path) {
  return guarded([&] {
    require(model != nullptr, "model");
    require(path != nullptr, "path");
    lendtree::write_file_atomic(path, lendtree::model_to_json(model->value));
  });
}

lt_status lt_model_load(const char* path, lt_model** out) {
  return guarded([&] {
    require(path != nullptr, "path");
    require(out != nullptr, "out");
    const std::string text = lendtree::read_file(path);
    *out = new lt_model{with_file(path, [&] { return lendtree::model_from_json(text); })};
  });
}

size_t lt_model_leaf_count(const lt_model* model) {
  return model == nullptr ? 0 : lendtree::leaf_count(model->value.tree);
}

lt_status lt_model_render_tree(const lt_model* model, char** out_text) {
  return guarded([&] {
    require(model != nullptr, "model");
    require(out_text != nullptr, "out_text");
    *out_text = duplicate(lendtree::render_tree(model->value.tree));
  });
}

lt_status lt_model_render_rules(const lt_model* model, char** out_text) {
  return guarded([&] {
    require(model != nullptr, "model");
    require(out_text != nullptr, "out_text");
    *out_text = duplicate(lendtree::render_rules(lendtree::extract_rules(model->value.tree)));
  });
}

lt_status lt_model_rules_table(const lt_model* model, const lt_config* config,
                               char** out_text) {
  return guarded([&] {
    require(model != nullptr, "model");
    require(config != nullptr, "config");
    require(out_text != nullptr, "out_text");
    std::ostringstream out;
    lendtree::write_rules_table(out, lendtree::extract_rules(model->value.tree),
                                config->value.delimiter);
    *out_text = duplicate(out.str());
  });
}

void lt_model_free(lt_model* model) { delete model; }

lt_status lt_predict(const lt_config* config, const lt_model* model,
                     const char* table_path, const char* out_path, size_t* out_fallbacks) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(model != nullptr, "model");
    require(table_path != nullptr, "table_path");
    require(out_path != nullptr, "out_path");
    std::ifstream in = open_input(table_path);
    const lendtree::PredictResult result = with_file(table_path, [&] {
      const lendtree::Table table = lendtree::read_table(in, config->value.delimiter);
      return lendtree::predict(model->value, table, config->value);
    });
    lendtree::write_file_atomic(out_path, result.table);
    if (out_fallbacks != nullptr) *out_fallbacks = result.fallbacks;
  });
}

lt_status lt_evaluate(const lt_config* config, const lt_dataset* dataset,
                      const char* out_dir, double* out_mean_accuracy) {
  return guarded([&] {
    require(config != nullptr, "config");
    require(dataset != nullptr, "dataset");
    require(out_dir != nullptr, "out_dir");
    const lendtree::EvaluateResult result =
        lendtree::evaluate(dataset->value, config->value);
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw lendtree::Error(lendtree::ErrorCode::kIo,
                            "cannot create " + dir.string() + ": " + ec.message());
    }
    lendtree::write_file_atomic(dir / "report.txt", result.report_text);
    lendtree::write_file_atomic(dir / "metrics.csv", result.metrics_table);
    lendtree::write_file_atomic(dir / "sectors.csv", result.sectors_table);
    if (out_mean_accuracy != nullptr) *out_mean_accuracy = result.report.mean_accuracy;
  });
}

}  // extern "C"
