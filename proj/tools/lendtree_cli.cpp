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

// lendtree command-line front end. Links only the C interface.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lendtree/lendtree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct Failure {
  lt_status status;
};

void check(lt_status status) {
  if (status != LT_OK) throw Failure{status};
}

struct ConfigDeleter {
  void operator()(lt_config* c) const { lt_config_free(c); }
};
struct DatasetDeleter {
  void operator()(lt_dataset* d) const { lt_dataset_free(d); }
};
struct ModelDeleter {
  void operator()(lt_model* m) const { lt_model_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { lt_string_free(s); }
};

using ConfigPtr = std::unique_ptr<lt_config, ConfigDeleter>;
using DatasetPtr = std::unique_ptr<lt_dataset, DatasetDeleter>;
using ModelPtr = std::unique_ptr<lt_model, ModelDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct GlobalOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::string> sets;
  std::string seed;
  std::string folds;
  std::string confidence;
  std::string min_leaf;
  std::string criterion;
};

ConfigPtr make_config(const GlobalOptions& g) {
  lt_config* raw = nullptr;
  check(g.config_path.empty() ? lt_config_new(&raw)
                              : lt_config_load(g.config_path.c_str(), &raw));
  ConfigPtr config(raw);
  auto apply = [&](const char* key, const std::string& value) {
    if (!value.empty()) check(lt_config_set(config.get(), key, value.c_str()));
  };
  for (const std::string& kv : g.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--set", "expected key=value, got '" + kv + "'");
    }
    apply(kv.substr(0, eq).c_str(), kv.substr(eq + 1));
  }
  apply("seed", g.seed);
  apply("folds", g.folds);
  apply("prune.confidence", g.confidence);
  apply("tree.min_leaf", g.min_leaf);
  apply("tree.criterion", g.criterion);
  return config;
}

std::string in_dir(const GlobalOptions& g, const std::string& name) {
  return (std::filesystem::path(g.out_dir) / name).string();
}

void write_text(const std::string& path, const char* text) {
  std::FILE* f = std::fopen((path + ".tmp").c_str(), "wb");
  if (f == nullptr) throw std::runtime_error("cannot write " + path);
  const std::size_t n = std::strlen(text);
  const bool ok = std::fwrite(text, 1, n, f) == n;
  if (std::fclose(f) != 0 || !ok) throw std::runtime_error("cannot write " + path);
  std::filesystem::rename(path + ".tmp", path);
}

DatasetPtr load_dataset(const lt_config* config, const std::string& path) {
  lt_dataset* raw = nullptr;
  check(lt_dataset_load(config, path.c_str(), &raw));
  return DatasetPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision-tree loan grading pipeline"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", lt_version());

  GlobalOptions g;
  app.add_option("--config", g.config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--out-dir", g.out_dir, "directory for output files");
  app.add_option("--set", g.sets, "configuration override key=value (repeatable)");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--folds", g.folds, "cross-validation folds");
  app.add_option("--confidence", g.confidence, "pruning confidence factor");
  app.add_option("--min-leaf", g.min_leaf, "minimum rows per branch");
  app.add_option("--criterion", g.criterion, "split criterion")
      ->check(CLI::IsMember({"gain-ratio", "info-gain"}));

  std::size_t n = 0;
  std::string accounts_out;
  std::string transactions_out;
  CLI::App* synth = app.add_subcommand("synth", "generate synthetic accounts and transactions");
  synth->add_option("-n,--accounts-count", n, "number of accounts (default synth.accounts)")->check(CLI::PositiveNumber);
  synth->add_option("--accounts", accounts_out, "accounts output (default OUT_DIR/accounts.csv)");
  synth->add_option("--transactions", transactions_out,
                    "transactions output (default OUT_DIR/transactions.csv)");

  std::string accounts_in;
  std::string transactions_in;
  std::string table_out;
  CLI::App* featurize = app.add_subcommand("featurize", "build the discretized table");
  featurize->add_option("accounts", accounts_in, "accounts table")->required();
  featurize->add_option("transactions", transactions_in, "transactions table")->required();
  featurize->add_option("-o,--output", table_out, "output (default OUT_DIR/discretized.csv)");

  std::string table_in;
  CLI::App* train = app.add_subcommand("train", "induce and prune a tree");
  train->add_option("table", table_in, "discretized table")->required();

  std::string model_in;
  std::string predict_in;
  std::string predictions_out;
  CLI::App* predict = app.add_subcommand("predict", "grade rows with a trained model");
  predict->add_option("model", model_in, "model.json")->required();
  predict->add_option("table", predict_in, "discretized table")->required();
  predict->add_option("-o,--output", predictions_out,
                      "output (default OUT_DIR/predictions.csv)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "cross-validate and rank sectors");
  evaluate->add_option("table", table_in, "discretized table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ConfigPtr config = make_config(g);
    if (!g.out_dir.empty()) std::filesystem::create_directories(g.out_dir);

    if (*synth) {
      const std::string a = accounts_out.empty() ? in_dir(g, "accounts.csv") : accounts_out;
      const std::string t =
          transactions_out.empty() ? in_dir(g, "transactions.csv") : transactions_out;
      check(lt_synth(config.get(), n, a.c_str(), t.c_str()));
      std::printf("wrote %s and %s\n", a.c_str(), t.c_str());
    } else if (*featurize) {
      const std::string out = table_out.empty() ? in_dir(g, "discretized.csv") : table_out;
      char* summary = nullptr;
      check(lt_featurize(config.get(), accounts_in.c_str(), transactions_in.c_str(),
                         out.c_str(), &summary));
      const StringPtr owned(summary);
      std::fputs(summary, stdout);
      std::printf("wrote %s\n", out.c_str());
    } else if (*train) {
      const DatasetPtr data = load_dataset(config.get(), table_in);
      lt_model* raw = nullptr;
      check(lt_train(config.get(), data.get(), &raw));
      const ModelPtr model(raw);
      check(lt_model_save(model.get(), in_dir(g, "model.json").c_str()));
      char* text = nullptr;
      check(lt_model_render_tree(model.get(), &text));
      StringPtr tree(text);
      write_text(in_dir(g, "tree.txt"), tree.get());
      check(lt_model_render_rules(model.get(), &text));
      StringPtr rules(text);
      write_text(in_dir(g, "rules.txt"), rules.get());
      check(lt_model_rules_table(model.get(), config.get(), &text));
      StringPtr table(text);
      write_text(in_dir(g, "rules.csv"), table.get());
      std::printf("Number of Leaves : %zu\n", lt_model_leaf_count(model.get()));
    } else if (*predict) {
      lt_model* raw = nullptr;
      check(lt_model_load(model_in.c_str(), &raw));
      const ModelPtr model(raw);
      const std::string out =
          predictions_out.empty() ? in_dir(g, "predictions.csv") : predictions_out;
      std::size_t fallbacks = 0;
      check(lt_predict(config.get(), model.get(), predict_in.c_str(), out.c_str(),
                       &fallbacks));
      std::printf("wrote %s (%zu fallback rows)\n", out.c_str(), fallbacks);
    } else if (*evaluate) {
      const DatasetPtr data = load_dataset(config.get(), table_in);
      double mean = 0.0;
      check(lt_evaluate(config.get(), data.get(), g.out_dir.c_str(), &mean));
      std::printf("mean accuracy %.6f; reports in %s\n", mean, g.out_dir.c_str());
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "lendtree: %s: %s\n", lt_status_name(f.status), lt_last_error());
    if (f.status == LT_E_INTERNAL) return kExitInternal;
    // A bad option value or configuration file is a usage error.
    if (f.status == LT_E_INVALID_CONFIG || f.status == LT_E_INVALID_PROFILE) return kExitUsage;
    return kExitData;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "lendtree: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "lendtree: %s\n", e.what());
    return kExitInternal;
  }
  return kExitOk;
}
