/*
 * Copyright 2026 The lendtree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the lendtree pipeline.
 *
 * Every fallible call returns an lt_status; on failure lt_last_error()
 * returns a message for the calling thread, valid until that thread's next
 * call into the library. Objects are opaque handles released with their
 * matching *_free function. Strings returned through char** out-parameters
 * are owned by the caller and released with lt_string_free.
 */

#ifndef LENDTREE_LENDTREE_H_
#define LENDTREE_LENDTREE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LENDTREE_BUILDING)
#    define LT_API __declspec(dllexport)
#  else
#    define LT_API __declspec(dllimport)
#  endif
#else
#  define LT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int lt_status;

enum {
  LT_OK = 0,
  LT_E_INVALID_ARGUMENT = 1,
  LT_E_IO = 2,
  LT_E_INVALID_CONFIG = 3,
  LT_E_MALFORMED_ROW = 4,
  LT_E_DUPLICATE_ACCOUNT = 5,
  LT_E_UNKNOWN_ACCOUNT = 6,
  LT_E_EMPTY_DATASET = 7,
  LT_E_NON_POSITIVE_SANCTION = 8,
  LT_E_NON_FINITE_VALUE = 9,
  LT_E_INVALID_WEIGHTS = 10,
  LT_E_OUT_OF_RANGE = 11,
  LT_E_EMPTY_DISTRIBUTION = 12,
  LT_E_UNKNOWN_ATTRIBUTE = 13,
  LT_E_MISSING_ATTRIBUTE_VALUE = 14,
  LT_E_INVALID_COUNTS = 15,
  LT_E_NO_MATCH = 16,
  LT_E_TOO_FEW_ROWS = 17,
  LT_E_SCHEMA_MISMATCH = 18,
  LT_E_INVALID_PROFILE = 19,
  LT_E_INTERNAL = 99
};

typedef struct lt_config lt_config;
typedef struct lt_dataset lt_dataset;
typedef struct lt_model lt_model;

LT_API const char* lt_version(void);
LT_API const char* lt_last_error(void);
/* Symbolic name such as "TooFewRows"; "Unknown" for foreign values. */
LT_API const char* lt_status_name(lt_status status);
LT_API void lt_string_free(char* text);

/* Configuration. */
LT_API lt_status lt_config_new(lt_config** out);
LT_API lt_status lt_config_load(const char* path, lt_config** out);
LT_API lt_status lt_config_set(lt_config* config, const char* key,
                               const char* value);
LT_API lt_status lt_config_dump(const lt_config* config, char** out_text);
LT_API void lt_config_free(lt_config* config);

/* Writes `n` synthetic accounts and their transactions; n = 0 uses the
 * configured synth.accounts. */
LT_API lt_status lt_synth(const lt_config* config, size_t n,
                          const char* accounts_path,
                          const char* transactions_path);

/* Writes the discretized table; *out_summary (optional) receives the column
 * filter report and warnings. */
LT_API lt_status lt_featurize(const lt_config* config,
                              const char* accounts_path,
                              const char* transactions_path,
                              const char* out_path, char** out_summary);

/* Discretized table with a class column. */
LT_API lt_status lt_dataset_load(const lt_config* config, const char* path,
                                 lt_dataset** out);
LT_API size_t lt_dataset_rows(const lt_dataset* dataset);
LT_API size_t lt_dataset_attributes(const lt_dataset* dataset);
LT_API void lt_dataset_free(lt_dataset* dataset);

/* Induces and (unless disabled) prunes a tree on every row. */
LT_API lt_status lt_train(const lt_config* config, const lt_dataset* dataset,
                          lt_model** out);
LT_API lt_status lt_model_save(const lt_model* model, const char* path);
LT_API lt_status lt_model_load(const char* path, lt_model** out);
LT_API size_t lt_model_leaf_count(const lt_model* model);
LT_API lt_status lt_model_render_tree(const lt_model* model, char** out_text);
LT_API lt_status lt_model_render_rules(const lt_model* model,
                                       char** out_text);
/* One delimited row per rule. */
LT_API lt_status lt_model_rules_table(const lt_model* model,
                                      const lt_config* config,
                                      char** out_text);
LT_API void lt_model_free(lt_model* model);

/* Predicts every row of `table_path`; *out_fallbacks (optional) receives the
 * number of rows no rule matched. */
LT_API lt_status lt_predict(const lt_config* config, const lt_model* model,
                            const char* table_path, const char* out_path,
                            size_t* out_fallbacks);

/* Writes report.txt, metrics.csv and sectors.csv into out_dir. The mean
 * accuracy is stored in *out_mean_accuracy when non-null. */
LT_API lt_status lt_evaluate(const lt_config* config,
                             const lt_dataset* dataset, const char* out_dir,
                             double* out_mean_accuracy);

#ifdef __cplusplus
}
#endif

#endif /* LENDTREE_LENDTREE_H_ */
