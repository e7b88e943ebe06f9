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

#include "lendtree/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lendtree/error.hpp"
#include "lendtree/table.hpp"
#include "parse_util.hpp"

namespace lendtree {
namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::kInvalidConfig, "invalid value '" + std::string(value) +
                                             "' for " + std::string(key));
}

double to_double(std::string_view key, std::string_view value) {
  const auto v = detail::parse_double(value);
  if (!v) bad_value(key, value);
  return *v;
}

bool to_bool(std::string_view key, std::string_view value) {
  const auto v = detail::parse_bool(value);
  if (!v) bad_value(key, value);
  return *v;
}

template <typename Int>
Int to_integer(std::string_view key, std::string_view value) {
  const auto v = detail::parse_integer<Int>(value);
  if (!v) bad_value(key, value);
  return *v;
}

Date to_date(std::string_view key, std::string_view value) {
  const auto d = parse_iso_date(trim(value));
  if (!d) bad_value(key, value);
  return *d;
}

void set_window(WindowSpec& window, bool from, std::string_view key,
                std::string_view value) {
  const Date d = to_date(key, value);
  // Endpoints are validated together in validate(); a config file may set
  // either end first.
  (from ? window.from_date : window.to_date) = d;
}

std::vector<std::string> to_list(std::string_view value) {
  std::vector<std::string> items;
  if (trim(value).empty()) return items;
  for (std::string& item : detail::split(value, ';')) {
    if (!item.empty()) items.push_back(std::move(item));
  }
  return items;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ';';
    out += item;
  }
  return out;
}

std::string_view criterion_name(SplitCriterion c) {
  return c == SplitCriterion::kGainRatio ? "gain-ratio" : "info-gain";
}

std::string_view min_leaf_rule_name(MinLeafRule r) {
  return r == MinLeafRule::kAtLeastTwoBranches ? "two-branches" : "every-branch";
}

std::string_view unseen_name(UnseenValuePolicy p) {
  return p == UnseenValuePolicy::kSubtreeMajority ? "majority" : "error";
}

std::string delimiter_text(char d) {
  if (d == '\t') return "tab";
  return std::string(1, d);
}

}  // namespace

void PipelineConfig::set(std::string_view key_in, std::string_view value_in) {
  const std::string key = trim(key_in);
  const std::string value = trim(value_in);
  const std::string_view k = key;

  if (k == "delimiter") {
    if (iequals(value, "tab") || value == "\\t") {
      delimiter = '\t';
    } else if (value.size() == 1 && value[0] != '"') {
      delimiter = value[0];
    } else {
      bad_value(k, value);
    }
  } else if (k == "account_window.from") {
    set_window(account_window, true, k, value);
  } else if (k == "account_window.to") {
    set_window(account_window, false, k, value);
  } else if (k == "tx_window.from") {
    set_window(tx_window, true, k, value);
  } else if (k == "tx_window.to") {
    set_window(tx_window, false, k, value);
  } else if (k == "window_months") {
    window_months = to_integer<int>(k, value);
  } else if (k == "allowed_codes") {
    std::set<int> codes;
    for (const std::string& item : to_list(value)) codes.insert(to_integer<int>(k, item));
    allowed_codes = std::move(codes);
  } else if (k == "narrative_blocklist") {
    narrative_blocklist = to_list(value);
  } else if (k == "filter.enabled") {
    filter_columns = to_bool(k, value);
  } else if (k == "null_fraction_threshold") {
    null_fraction_threshold = to_double(k, value);
  } else if (k.starts_with("bins.")) {
    const std::string_view which = k.substr(5);
    BinScheme* scheme = nullptr;
    if (which == "amount4") scheme = &schemes.amount;
    if (which == "total6") scheme = &schemes.total;
    if (which == "principal3") scheme = &schemes.principal;
    if (which == "voucher4") scheme = &schemes.voucher;
    if (which == "adjust2") scheme = &schemes.adjust;
    if (scheme == nullptr) {
      throw Error(ErrorCode::kInvalidConfig, "unknown key " + key);
    }
    *scheme = BinScheme::parse(std::string(which), value);
  } else if (k.starts_with("score.weight.")) {
    const std::string_view name = k.substr(13);
    std::size_t i = 0;
    while (i < kScoreComponents.size() && kScoreComponents[i] != name) ++i;
    if (i == kScoreComponents.size()) {
      throw Error(ErrorCode::kInvalidConfig, "unknown key " + key);
    }
    score_weights[i] = to_double(k, value);
  } else if (k == "id_column") {
    columns.id_column = value;
  } else if (k == "class_column") {
    if (value.empty()) bad_value(k, value);
    columns.class_column = value;
  } else if (k == "tree.criterion") {
    if (value == "gain-ratio") {
      tree.criterion = SplitCriterion::kGainRatio;
    } else if (value == "info-gain") {
      tree.criterion = SplitCriterion::kInfoGain;
    } else {
      bad_value(k, value);
    }
  } else if (k == "tree.min_leaf") {
    tree.min_leaf_count = to_integer<std::size_t>(k, value);
  } else if (k == "tree.mean_gain_filter") {
    tree.mean_gain_filter = to_bool(k, value);
  } else if (k == "tree.min_leaf_rule") {
    if (value == "two-branches") {
      tree.min_leaf_rule = MinLeafRule::kAtLeastTwoBranches;
    } else if (value == "every-branch") {
      tree.min_leaf_rule = MinLeafRule::kEveryBranch;
    } else {
      bad_value(k, value);
    }
  } else if (k == "tree.unseen") {
    if (value == "majority") {
      unseen_value = UnseenValuePolicy::kSubtreeMajority;
    } else if (value == "error") {
      unseen_value = UnseenValuePolicy::kError;
    } else {
      bad_value(k, value);
    }
  } else if (k == "prune.enabled") {
    prune.enabled = to_bool(k, value);
  } else if (k == "prune.confidence") {
    prune.confidence = to_double(k, value);
  } else if (k == "prune.slack") {
    prune.slack = to_double(k, value);
  } else if (k == "rules.fallback") {
    rule_fallback = to_bool(k, value);
  } else if (k == "folds") {
    folds = to_integer<std::size_t>(k, value);
  } else if (k == "seed") {
    seed = to_integer<std::uint64_t>(k, value);
  } else if (k == "synth.accounts") {
    synth_accounts = to_integer<std::size_t>(k, value);
  } else if (k.starts_with("synth.")) {
    synth.set(k, value);
  } else {
    throw Error(ErrorCode::kInvalidConfig, "unknown key " + key);
  }
}

void PipelineConfig::validate() const {
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::kInvalidConfig, message);
  };
  if (delimiter == '"' || delimiter == '\n' || delimiter == '\r') {
    fail("delimiter cannot be a quote or line break");
  }
  if (account_window.from_date > account_window.to_date) {
    fail("account_window.from is after account_window.to");
  }
  if (tx_window.from_date > tx_window.to_date) {
    fail("tx_window.from is after tx_window.to");
  }
  if (window_months < 1 || window_months > 120) fail("window_months must be in [1, 120]");
  if (allowed_codes.empty()) fail("allowed_codes is empty");
  if (!(null_fraction_threshold > 0.0 && null_fraction_threshold <= 1.0)) {
    fail("null_fraction_threshold must be in (0, 1]");
  }
  double sum = 0.0;
  for (double w : score_weights) {
    if (!(w >= 0.0)) fail("score weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail("score weights must sum to 1");
  if (tree.min_leaf_count < 1) fail("tree.min_leaf must be at least 1");
  if (columns.class_column.empty()) fail("class_column is empty");
  prune.validate();
  if (folds < 2) fail("folds must be at least 2");
  if (synth_accounts < 1) fail("synth.accounts must be at least 1");
  synth.validate();
}

std::string PipelineConfig::to_text() const {
  std::ostringstream out;
  auto line = [&](std::string_view key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  auto num = [](double v) { return detail::format_double(v); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

  line("delimiter", delimiter_text(delimiter));
  line("account_window.from", format_iso_date(account_window.from_date));
  line("account_window.to", format_iso_date(account_window.to_date));
  line("tx_window.from", format_iso_date(tx_window.from_date));
  line("tx_window.to", format_iso_date(tx_window.to_date));
  line("window_months", std::to_string(window_months));
  std::vector<std::string> codes;
  for (int c : allowed_codes) codes.push_back(std::to_string(c));
  line("allowed_codes", join(codes));
  line("narrative_blocklist", join(narrative_blocklist));
  line("filter.enabled", flag(filter_columns));
  line("null_fraction_threshold", num(null_fraction_threshold));
  line("bins.amount4", schemes.amount.to_string());
  line("bins.total6", schemes.total.to_string());
  line("bins.principal3", schemes.principal.to_string());
  line("bins.voucher4", schemes.voucher.to_string());
  line("bins.adjust2", schemes.adjust.to_string());
  for (std::size_t i = 0; i < kScoreComponents.size(); ++i) {
    line("score.weight." + std::string(kScoreComponents[i]), num(score_weights[i]));
  }
  line("id_column", columns.id_column);
  line("class_column", columns.class_column);
  line("tree.criterion", std::string(criterion_name(tree.criterion)));
  line("tree.min_leaf", std::to_string(tree.min_leaf_count));
  line("tree.mean_gain_filter", flag(tree.mean_gain_filter));
  line("tree.min_leaf_rule", std::string(min_leaf_rule_name(tree.min_leaf_rule)));
  line("tree.unseen", std::string(unseen_name(unseen_value)));
  line("prune.enabled", flag(prune.enabled));
  line("prune.confidence", num(prune.confidence));
  line("prune.slack", num(prune.slack));
  line("rules.fallback", flag(rule_fallback));
  line("folds", std::to_string(folds));
  line("seed", std::to_string(seed));
  line("synth.accounts", std::to_string(synth_accounts));
  line("synth.disburse_from", format_iso_date(synth.disburse_from));
  line("synth.disburse_to", format_iso_date(synth.disburse_to));
  line("synth.window_months", std::to_string(synth.window_months));
  line("synth.inactive_share", num(synth.inactive_share));
  line("synth.system_posting_share", num(synth.system_posting_share));
  line("synth.foreign_code_share", num(synth.foreign_code_share));
  line("synth.missing_amount_share", num(synth.missing_amount_share));
  std::vector<std::string> names;
  for (const SectorProfile& s : synth.sectors) names.push_back(s.name);
  line("synth.sectors", join(names));
  for (const SectorProfile& s : synth.sectors) {
    const std::string prefix = "synth.sector." + s.name + ".";
    line(prefix + "weight", num(s.weight));
    line(prefix + "quality", num(s.quality));
    line(prefix + "activity", num(s.activity));
    line(prefix + "limit_min", num(s.limit_min));
    line(prefix + "limit_max", num(s.limit_max));
  }
  return out.str();
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const std::string t = trim(text);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos || trim(t.substr(0, eq)).empty()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    pairs.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return pairs;
}

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig config;
  for (const auto& [key, value] : parse_key_values(in)) config.set(key, value);
  config.validate();
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path.string());
  try {
    return parse_config(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace lendtree
