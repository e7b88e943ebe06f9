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

#include "lendtree/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lendtree/error.hpp"
#include "lendtree/table.hpp"
#include "parse_util.hpp"

namespace lendtree {
namespace {

struct SideStats {
  double min = 0.0;
  double max = 0.0;
  double total = 0.0;
  std::size_t count = 0;

  void add(double amount) {
    min = count == 0 ? amount : std::min(min, amount);
    max = count == 0 ? amount : std::max(max, amount);
    total += amount;
    ++count;
  }
};

// Column value as text plus a missing flag, for the statistical filter.
std::pair<std::string, bool> column_value(const RawFeatureRow& row,
                                          std::size_t column) {
  auto num = [](double v) {
    return std::pair{detail::format_double(v), std::isnan(v)};
  };
  switch (column) {
    case 0: return {row.sector, row.sector.empty()};
    case 1: return {row.sanction_authority, row.sanction_authority.empty()};
    case 2: return num(row.min_dr);
    case 3: return num(row.max_dr);
    case 4: return num(row.total_dr);
    case 5: return num(row.dr_voucher_monthly_avg);
    case 6: return num(row.min_cr);
    case 7: return num(row.max_cr);
    case 8: return num(row.total_cr);
    case 9: return num(row.cr_voucher_monthly_avg);
    case 10: return num(row.principal_amount);
    default: return {row.adjusted ? "1" : "0", false};
  }
}

}  // namespace

RawFeatureRow aggregate_features(std::span<const TransactionRecord> transactions,
                                 const AccountProfile& profile,
                                 int window_months) {
  if (window_months < 1) {
    throw Error(ErrorCode::kInvalidArgument, "window_months must be >= 1");
  }
  SideStats debit;
  SideStats credit;
  for (const TransactionRecord& t : transactions) {
    if (t.account_no != profile.account_no) {
      throw Error(ErrorCode::kUnknownAccount,
                  "transaction for account " + t.account_no +
                      " passed with profile " + profile.account_no);
    }
    (t.side == Side::kDebit ? debit : credit).add(t.amount);
  }
  RawFeatureRow row;
  row.account_no = profile.account_no;
  row.sector = profile.sector;
  row.sanction_authority = profile.sanction_authority;
  row.sanction_limit = profile.sanction_limit;
  row.min_dr = debit.min;
  row.max_dr = debit.max;
  row.total_dr = debit.total;
  row.dr_voucher_monthly_avg = static_cast<double>(debit.count) / window_months;
  row.min_cr = credit.min;
  row.max_cr = credit.max;
  row.total_cr = credit.total;
  row.cr_voucher_monthly_avg = static_cast<double>(credit.count) / window_months;
  row.principal_amount = profile.principal_amount.value_or(
      std::max(0.0, debit.total - credit.total));
  row.adjusted = profile.adjusted.value_or(debit.total > 0.0 &&
                                           credit.total >= debit.total);
  row.score = profile.score;
  return row;
}

std::vector<RawFeatureRow> aggregate_all(
    std::span<const AccountProfile> profiles,
    std::span<const TransactionRecord> transactions, int window_months) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    index.emplace(profiles[i].account_no, i);
  }
  std::vector<std::vector<TransactionRecord>> grouped(profiles.size());
  for (const TransactionRecord& t : transactions) {
    const auto it = index.find(t.account_no);
    if (it == index.end()) {
      throw Error(ErrorCode::kUnknownAccount,
                  "transaction references unknown account " + t.account_no);
    }
    grouped[it->second].push_back(t);
  }
  std::vector<RawFeatureRow> rows;
  rows.reserve(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    rows.push_back(aggregate_features(grouped[i], profiles[i], window_months));
  }
  return rows;
}

std::string_view drop_reason_name(DropReason reason) noexcept {
  switch (reason) {
    case DropReason::kSingleValued: return "SingleValued";
    case DropReason::kMissingValues: return "MissingValues";
  }
  return "Unknown";
}

std::string FilterReport::to_text() const {
  std::ostringstream out;
  out << "Column filter: " << retained.size() + dropped.size() << " columns, "
      << retained.size() << " retained, " << dropped.size() << " dropped\n";
  for (const DroppedColumn& d : dropped) {
    out << "  dropped " << d.column << ": " << drop_reason_name(d.reason);
    if (d.reason == DropReason::kMissingValues) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", d.missing_fraction * 100.0);
      out << " (" << buf << "% missing)";
    }
    out << '\n';
  }
  if (degenerate) out << "  warning: degenerate input, no informative columns\n";
  return out.str();
}

FilterReport statistical_filter(std::span<const RawFeatureRow> rows,
                                double null_fraction_threshold) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyDataset, "no feature rows to filter");
  if (!(null_fraction_threshold > 0.0 && null_fraction_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "null fraction threshold must be in (0, 1]");
  }
  FilterReport report;
  for (std::size_t c = 0; c < kAttributeColumns.size(); ++c) {
    std::set<std::string> distinct;
    std::size_t missing = 0;
    for (const RawFeatureRow& row : rows) {
      auto [value, is_missing] = column_value(row, c);
      if (is_missing) {
        ++missing;
      } else {
        distinct.insert(std::move(value));
      }
    }
    const double fraction = static_cast<double>(missing) / rows.size();
    const std::string name(kAttributeColumns[c]);
    if (missing > 0 && fraction >= null_fraction_threshold) {
      report.dropped.push_back({name, DropReason::kMissingValues, fraction});
    } else if (distinct.size() <= 1) {
      report.dropped.push_back({name, DropReason::kSingleValued, fraction});
    } else {
      report.retained.push_back(name);
    }
  }
  report.degenerate = rows.size() == 1 || report.retained.empty();
  return report;
}

double turnover(double attribute_value, double sanction_amount) {
  if (!std::isfinite(sanction_amount) || sanction_amount <= 0.0) {
    throw Error(ErrorCode::kNonPositiveSanction,
                "sanction amount must be positive, got " +
                    detail::format_double(sanction_amount));
  }
  if (!std::isfinite(attribute_value) || attribute_value < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "turnover needs a finite non-negative value");
  }
  return attribute_value / sanction_amount * 100.0;
}

BinScheme::BinScheme(std::string name, std::vector<Bin> bins)
    : name_(std::move(name)), bins_(std::move(bins)) {
  if (bins_.empty()) throw Error(ErrorCode::kInvalidConfig, "bin scheme " + name_ + " is empty");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < bins_.size(); ++i) {
    if (std::isnan(bins_[i].upper_bound)) {
      throw Error(ErrorCode::kInvalidConfig, "bin scheme " + name_ + " has a NaN bound");
    }
    if (i > 0 && !(bins_[i].upper_bound > bins_[i - 1].upper_bound)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "bin scheme " + name_ + " bounds must strictly increase");
    }
    if (bins_[i].label.empty() || !labels.insert(bins_[i].label).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "bin scheme " + name_ + " has an empty or repeated label");
    }
  }
  if (bins_.back().upper_bound != kUnbounded) {
    throw Error(ErrorCode::kInvalidConfig, "bin scheme " + name_ + " must end with inf");
  }
}

BinScheme BinScheme::parse(std::string name, std::string_view text) {
  std::vector<Bin> bins;
  for (const std::string& part : detail::split(text, ',')) {
    const std::size_t colon = part.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "bin '" + part + "' in scheme " + name + " needs bound:label");
    }
    const auto bound = detail::parse_double(part.substr(0, colon), true);
    if (!bound) {
      throw Error(ErrorCode::kInvalidConfig, "bad bin bound in '" + part + "'");
    }
    bins.push_back({*bound, trim(part.substr(colon + 1))});
  }
  return BinScheme(std::move(name), std::move(bins));
}

std::vector<std::string> BinScheme::labels() const {
  std::vector<std::string> out;
  for (const Bin& b : bins_) out.push_back(b.label);
  return out;
}

std::size_t BinScheme::index_of(double value) const {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFiniteValue, "cannot bin a non-finite value");
  }
  for (std::size_t i = 0; i < bins_.size(); ++i) {
    if (value <= bins_[i].upper_bound) return i;
  }
  return bins_.size() - 1;  // unreachable: last bound is +inf
}

std::string BinScheme::to_string() const {
  std::string out;
  for (const Bin& b : bins_) {
    if (!out.empty()) out += ',';
    out += detail::format_double(b.upper_bound) + ':' + b.label;
  }
  return out;
}

BinScheme amount4_scheme() {
  return BinScheme("amount4", {{25, "LessEqual25"},
                               {50, "LessEqual50"},
                               {75, "LessEqual75"},
                               {kUnbounded, "Above75"}});
}

BinScheme total6_scheme() {
  return BinScheme("total6", {{100, "LessEqual100"},
                              {200, "LessEqual200"},
                              {300, "LessEqual300"},
                              {400, "LessEqual400"},
                              {500, "LessEqual500"},
                              {kUnbounded, "Above500"}});
}

BinScheme principal3_scheme() {
  return BinScheme("principal3", {{50, "LessEqual50"},
                                  {100, "Above50"},
                                  {kUnbounded, "ExceedLimit"}});
}

BinScheme voucher4_scheme() {
  return BinScheme("voucher4", {{3, "LessEqual3"},
                                {6, "LessEqual6"},
                                {10, "LessEqual10"},
                                {kUnbounded, "Above10"}});
}

BinScheme adjust2_scheme() {
  return BinScheme("adjust2", {{0, "NoAdjusted"}, {kUnbounded, "Adjusted"}});
}

double compute_score(std::span<const double> components,
                     std::span<const double> weights) {
  if (components.empty() || components.size() != weights.size()) {
    throw Error(ErrorCode::kInvalidWeights,
                "need one weight per score component");
  }
  double weight_sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidWeights, "score weights must be >= 0");
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidWeights,
                "score weights sum to " + detail::format_double(weight_sum) +
                    ", expected 1");
  }
  double score = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i] >= 0.0 && components[i] <= 100.0)) {
      throw Error(ErrorCode::kOutOfRange, "component score outside [0, 100]");
    }
    score += components[i] * weights[i];
  }
  return std::clamp(score, 0.0, 100.0);
}

ScoreWeights default_score_weights() { return {0.4, 0.2, 0.1, 0.2, 0.1}; }

std::array<double, kScoreComponents.size()> score_components(
    const RawFeatureRow& row) {
  double repayment = 0.0;
  if (row.total_dr > 0.0) {
    repayment = std::min(100.0, row.total_cr / row.total_dr * 100.0);
  } else if (row.total_cr > 0.0) {
    repayment = 100.0;
  }
  const double credit_turnover =
      std::min(100.0, turnover(row.total_cr, row.sanction_limit));
  const double credit_activity =
      std::min(100.0, row.cr_voucher_monthly_avg * 10.0);
  const double headroom = std::max(
      0.0, 100.0 - turnover(row.principal_amount, row.sanction_limit));
  return {repayment, credit_turnover, credit_activity, headroom,
          row.adjusted ? 100.0 : 0.0};
}

double row_score(const RawFeatureRow& row, const ScoreWeights& weights) {
  if (row.score) return *row.score;
  const auto components = score_components(row);
  return compute_score(components, weights);
}

ClassLabel assign_class_label(double score) {
  if (!(score >= 0.0 && score <= 100.0)) {
    throw Error(ErrorCode::kOutOfRange,
                "score " + detail::format_double(score) + " outside [0, 100]");
  }
  if (score >= 90.0) return ClassLabel::kExcellent;
  if (score >= 80.0) return ClassLabel::kVeryGood;
  if (score >= 70.0) return ClassLabel::kGood;
  if (score >= 60.0) return ClassLabel::kMarginal;
  return ClassLabel::kBad;
}

const std::string& DiscretizedRow::attribute(std::string_view column) const {
  if (column == kAttributeColumns[0]) return sector;
  if (column == kAttributeColumns[1]) return sanction_authority;
  for (std::size_t i = 2; i < kAttributeColumns.size(); ++i) {
    if (column == kAttributeColumns[i]) return bins[i - 2];
  }
  throw Error(ErrorCode::kUnknownAttribute, "no column " + std::string(column));
}

DiscretizedRow discretize_row(const RawFeatureRow& row,
                              const FeatureSchemes& schemes,
                              ClassLabel class_label) {
  const double limit = row.sanction_limit;
  DiscretizedRow out;
  out.account_no = row.account_no;
  out.sector = row.sector;
  out.sanction_authority = row.sanction_authority;
  out.bins = {
      schemes.amount.discretize(turnover(row.min_dr, limit)),
      schemes.amount.discretize(turnover(row.max_dr, limit)),
      schemes.total.discretize(turnover(row.total_dr, limit)),
      schemes.voucher.discretize(row.dr_voucher_monthly_avg),
      schemes.amount.discretize(turnover(row.min_cr, limit)),
      schemes.amount.discretize(turnover(row.max_cr, limit)),
      schemes.total.discretize(turnover(row.total_cr, limit)),
      schemes.voucher.discretize(row.cr_voucher_monthly_avg),
      schemes.principal.discretize(turnover(row.principal_amount, limit)),
      schemes.adjust.discretize(row.adjusted ? 1.0 : 0.0),
  };
  out.class_label = class_label;
  return out;
}

void write_discretized_table(std::ostream& out,
                             std::span<const DiscretizedRow> rows,
                             std::span<const std::string> retained_columns,
                             char delimiter) {
  std::vector<std::string_view> columns;
  for (std::string_view c : kAttributeColumns) {
    if (std::find(retained_columns.begin(), retained_columns.end(), c) !=
        retained_columns.end()) {
      columns.push_back(c);
    }
  }
  std::vector<std::string> fields{std::string(kAccountColumn)};
  for (std::string_view c : columns) fields.emplace_back(c);
  fields.emplace_back(kClassColumn);
  write_table_row(out, fields, delimiter);
  for (const DiscretizedRow& row : rows) {
    fields.clear();
    fields.push_back(row.account_no);
    for (std::string_view c : columns) fields.push_back(row.attribute(c));
    fields.emplace_back(class_name(row.class_label));
    write_table_row(out, fields, delimiter);
  }
}

}  // namespace lendtree
