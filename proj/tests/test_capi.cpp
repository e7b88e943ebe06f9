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

// Exercises the shared library through its C header only.

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <unistd.h>

#include "lendtree/lendtree.h"

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("lendtree_capi_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    ASSERT_EQ(lt_config_new(&config_), LT_OK);
  }
  void TearDown() override {
    lt_config_free(config_);
    std::filesystem::remove_all(dir_);
  }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
  lt_config* config_ = nullptr;
};

TEST_F(CApi, StatusNames) {
  EXPECT_STREQ(lt_status_name(LT_OK), "Ok");
  EXPECT_STREQ(lt_status_name(LT_E_TOO_FEW_ROWS), "TooFewRows");
  EXPECT_STREQ(lt_status_name(12345), "Unknown");
  EXPECT_NE(std::strlen(lt_version()), 0u);
}

TEST_F(CApi, ConfigErrors) {
  EXPECT_EQ(lt_config_set(config_, "folds", "1"), LT_OK);  // range checked on use
  EXPECT_EQ(lt_config_set(config_, "no.such.key", "1"), LT_E_INVALID_CONFIG);
  EXPECT_NE(std::string(lt_last_error()).find("no.such.key"), std::string::npos);
  EXPECT_EQ(lt_config_set(nullptr, "folds", "2"), LT_E_INVALID_ARGUMENT);
  lt_config* loaded = nullptr;
  EXPECT_EQ(lt_config_load(path("missing.conf").c_str(), &loaded), LT_E_IO);
  EXPECT_EQ(loaded, nullptr);
  char* text = nullptr;
  ASSERT_EQ(lt_config_dump(config_, &text), LT_OK);
  EXPECT_NE(std::string(text).find("folds = 1"), std::string::npos);
  lt_string_free(text);
}

TEST_F(CApi, EndToEnd) {
  ASSERT_EQ(lt_config_set(config_, "seed", "3"), LT_OK);
  ASSERT_EQ(lt_synth(config_, 150, path("acc.csv").c_str(), path("tx.csv").c_str()), LT_OK)
      << lt_last_error();
  char* summary = nullptr;
  ASSERT_EQ(lt_featurize(config_, path("acc.csv").c_str(), path("tx.csv").c_str(),
                         path("table.csv").c_str(), &summary),
            LT_OK)
      << lt_last_error();
  EXPECT_NE(std::string(summary).find("Accounts: "), std::string::npos);
  lt_string_free(summary);

  lt_dataset* data = nullptr;
  ASSERT_EQ(lt_dataset_load(config_, path("table.csv").c_str(), &data), LT_OK);
  EXPECT_GT(lt_dataset_rows(data), 100u);
  EXPECT_GT(lt_dataset_attributes(data), 0u);

  lt_model* model = nullptr;
  ASSERT_EQ(lt_train(config_, data, &model), LT_OK) << lt_last_error();
  ASSERT_EQ(lt_model_save(model, path("model.json").c_str()), LT_OK);
  lt_model* reloaded = nullptr;
  ASSERT_EQ(lt_model_load(path("model.json").c_str(), &reloaded), LT_OK);
  EXPECT_EQ(lt_model_leaf_count(model), lt_model_leaf_count(reloaded));
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(lt_model_render_tree(model, &a), LT_OK);
  ASSERT_EQ(lt_model_render_tree(reloaded, &b), LT_OK);
  EXPECT_STREQ(a, b);
  lt_string_free(a);
  lt_string_free(b);
  ASSERT_EQ(lt_model_render_rules(model, &a), LT_OK);
  EXPECT_EQ(std::string(a).rfind("IF ", 0), 0u);
  lt_string_free(a);

  size_t fallbacks = 99;
  ASSERT_EQ(lt_predict(config_, reloaded, path("table.csv").c_str(),
                       path("pred.csv").c_str(), &fallbacks),
            LT_OK)
      << lt_last_error();
  EXPECT_EQ(fallbacks, 0u);
  EXPECT_EQ(read_file(path("pred.csv")).rfind("AccountNo,Predicted,Rule,Fallback\n", 0), 0u);

  ASSERT_EQ(lt_config_set(config_, "folds", "5"), LT_OK);
  double mean = -1.0;
  ASSERT_EQ(lt_evaluate(config_, data, path("eval").c_str(), &mean), LT_OK) << lt_last_error();
  EXPECT_GE(mean, 0.0);
  EXPECT_LE(mean, 1.0);
  for (const char* f : {"report.txt", "metrics.csv", "sectors.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir_ / "eval" / f)) << f;
  }
  lt_model_free(reloaded);
  lt_model_free(model);
  lt_dataset_free(data);
}

TEST_F(CApi, DataErrorsCarryThePath) {
  std::ofstream(path("bad.csv")) << "AccountNo,Sector,Class_Label\n1,Other,Superb\n";
  lt_dataset* data = nullptr;
  const lt_status s = lt_dataset_load(config_, path("bad.csv").c_str(), &data);
  EXPECT_NE(s, LT_OK);
  EXPECT_EQ(data, nullptr);
  EXPECT_NE(std::string(lt_last_error()).find("bad.csv"), std::string::npos);

  std::ofstream(path("tiny.csv")) << "AccountNo,Sector,Class_Label\n1,Other,Good\n2,Rice,Bad\n";
  ASSERT_EQ(lt_dataset_load(config_, path("tiny.csv").c_str(), &data), LT_OK);
  EXPECT_EQ(lt_evaluate(config_, data, path("eval").c_str(), nullptr), LT_E_TOO_FEW_ROWS);
  lt_dataset_free(data);
}

}  // namespace
