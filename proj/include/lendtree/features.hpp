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

// Per-account aggregates, turnover normalization, binning and grading.

#ifndef LENDTREE_FEATURES_HPP_
#define LENDTREE_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lendtree/class_label.hpp"
#include "lendtree/ingest.hpp"

namespace lendtree {

struct RawFeatureRow {
  std::string account_no;
  std::string sector;
  std::string sanction_authority;
  double sanction_limit = 0.0;
  double min_dr = 0.0;
  double max_dr = 0.0;
  double total_dr = 0.0;
  double dr_voucher_monthly_avg = 0.0;
  double min_cr = 0.0;
  double max_cr = 0.0;
  double total_cr = 0.0;
  double cr_voucher_monthly_avg = 0.0;
  double principal_amount = 0.0;
  bool adjusted = false;
  std::optional<double> score;
};

// `transactions` must all belong to `profile` (UnknownAccount otherwise) and
// should already be filtered. Principal defaults to the outstanding balance
// max(0, total_dr - total_cr); adjusted defaults to "some debit exists and
// credits cover it". Both may be overridden by the profile.
RawFeatureRow aggregate_features(std::span<const TransactionRecord> transactions,
                                 const AccountProfile& profile,
                                 int window_months = 6);

// Groups `transactions` by account and aggregates every profile, keeping the
// profile order. A transaction whose account has no profile throws
// UnknownAccount.
std::vector<RawFeatureRow> aggregate_all(
    std::span<const AccountProfile> profiles,
    std::span<const TransactionRecord> transactions, int window_months = 6);

// Attribute columns in discretized-table order.
inline constexpr std::array<std::string_view, 12> kAttributeColumns = {
    "Sector",        "SanctionAuthority", "minDrAmount", "maxDrAmount",
    "totalDrAmount", "drVoucherNo",       "minCrAmount", "maxCrAmount",
    "totalCrAmount", "crVoucherNo",       "PrincipalAmount", "adjustNo"};

inline constexpr std::string_view kAccountColumn = "AccountNo";
inline constexpr std::string_view kClassColumn = "Class_Label";

enum class DropReason { kSingleValued, kMissingValues };

std::string_view drop_reason_name(DropReason reason) noexcept;

struct DroppedColumn {
  std::string column;
  DropReason reason;
  double missing_fraction = 0.0;
};

struct FilterReport {
  std::vector<std::string> retained;
  std::vector<DroppedColumn> dropped;
  // Set for single-row input or when nothing survives.
  bool degenerate = false;

  std::string to_text() const;
};

// Column-wise filter over kAttributeColumns. Empty categorical values count
// as missing; numeric columns are null-free after ingest.
FilterReport statistical_filter(std::span<const RawFeatureRow> rows,
                                double null_fraction_threshold = 0.09);

// (value / sanction) * 100.
double turnover(double attribute_value, double sanction_amount);

class BinScheme {
 public:
  struct Bin {
    double upper_bound;  // inclusive; +inf for the last bin
    std::string label;
  };

  // Throws InvalidConfig unless bounds strictly increase, the last bound is
  // +inf and labels are unique.
  BinScheme(std::string name, std::vector<Bin> bins);

  // Parses "25:LessEqual25,50:LessEqual50,inf:Above50".
  static BinScheme parse(std::string name, std::string_view text);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Bin>& bins() const noexcept { return bins_; }
  std::vector<std::string> labels() const;

  // Index of the first bin whose upper bound is >= value. Throws
  // NonFiniteValue for NaN or infinite input.
  std::size_t index_of(double value) const;
  const std::string& discretize(double value) const {
    return bins_[index_of(value)].label;
  }

  std::string to_string() const;

 private:
  std::string name_;
  std::vector<Bin> bins_;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

BinScheme amount4_scheme();
BinScheme total6_scheme();
BinScheme principal3_scheme();
BinScheme voucher4_scheme();
// Flag scheme: 0 maps to NoAdjusted, anything above to Adjusted.
BinScheme adjust2_scheme();

inline const std::string& discretize(double value, const BinScheme& scheme) {
  return scheme.discretize(value);
}

struct FeatureSchemes {
  BinScheme amount = amount4_scheme();        // min/max debit and credit
  BinScheme total = total6_scheme();          // total debit and credit
  BinScheme principal = principal3_scheme();  // principal amount
  BinScheme voucher = voucher4_scheme();      // monthly voucher averages
  BinScheme adjust = adjust2_scheme();        // loan adjustment flag
};

// Weighted composite of component scores, each already in [0, 100]. Weights
// must be non-negative, match the components in length and sum to 1 (within
// 1e-9); otherwise InvalidWeights. The result is clamped to [0, 100].
double compute_score(std::span<const double> components,
                     std::span<const double> weights);

inline constexpr std::array<std::string_view, 5> kScoreComponents = {
    "repayment", "credit_turnover", "credit_activity", "limit_headroom",
    "adjustment"};

using ScoreWeights = std::array<double, kScoreComponents.size()>;

ScoreWeights default_score_weights();

// Component scores in kScoreComponents order, each in [0, 100]:
//   repayment        total credit as a share of total debit, capped at 100
//                    (100 with credits but no debit, 0 with neither)
//   credit_turnover  total credit turnover, capped at 100
//   credit_activity  credit vouchers per month, 10 scoring 100
//   limit_headroom   100 minus principal turnover
//   adjustment       100 when the loan is adjusted
std::array<double, kScoreComponents.size()> score_components(
    const RawFeatureRow& row);

// row.score when present, otherwise the weighted composite.
double row_score(const RawFeatureRow& row, const ScoreWeights& weights);

// >=90 Excellent, >=80 VeryGood, >=70 Good, >=60 Marginal, else Bad.
// OutOfRange outside [0, 100].
ClassLabel assign_class_label(double score);

struct DiscretizedRow {
  std::string account_no;
  std::string sector;
  std::string sanction_authority;
  // Bin labels for kAttributeColumns[2..11].
  std::array<std::string, 10> bins;
  ClassLabel class_label = ClassLabel::kBad;

  // Value for any kAttributeColumns entry.
  const std::string& attribute(std::string_view column) const;
};

DiscretizedRow discretize_row(const RawFeatureRow& row,
                              const FeatureSchemes& schemes,
                              ClassLabel class_label);

// Header: AccountNo, the retained attribute columns in kAttributeColumns
// order, Class_Label.
void write_discretized_table(std::ostream& out,
                             std::span<const DiscretizedRow> rows,
                             std::span<const std::string> retained_columns,
                             char delimiter = ',');

}  // namespace lendtree

#endif  // LENDTREE_FEATURES_HPP_
