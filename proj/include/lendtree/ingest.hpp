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

// Account and transaction tables: parsing, selection and filtering.

#ifndef LENDTREE_INGEST_HPP_
#define LENDTREE_INGEST_HPP_

#include <chrono>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lendtree {

using Date = std::chrono::year_month_day;

// Strict YYYY-MM-DD; returns nullopt for anything else or an invalid date.
std::optional<Date> parse_iso_date(std::string_view text);
std::string format_iso_date(Date date);

// Calendar-month arithmetic; the day is clamped to the target month's end.
Date add_months(Date date, int months);

struct WindowSpec {
  Date from_date;
  Date to_date;

  // Throws InvalidArgument when from_date > to_date.
  WindowSpec(Date from, Date to);

  bool contains(Date date) const noexcept {
    return from_date <= date && date <= to_date;
  }
};

// [start, start + months) expressed with an inclusive end date.
WindowSpec observation_window(Date start, int months);

struct AccountProfile {
  std::string account_no;
  std::string title;
  std::string sector;
  std::string sanction_authority;
  double sanction_limit = 0.0;
  std::optional<Date> disburse_date;
  std::string status = "Active";
  // Optional expert-supplied inputs; derived from transactions when absent.
  std::optional<double> principal_amount;
  std::optional<bool> adjusted;
  std::optional<double> score;
};

enum class Side { kDebit, kCredit };

struct TransactionRecord {
  std::string account_no;
  Date tx_date;
  int tx_type_code = 0;
  Side side = Side::kDebit;
  double amount = 0.0;
  bool system_generated = false;
  std::string narrative;
};

// 1 CASH, 2 CLEARING, 11 PAY ORDER, 29 other credits, 30 other debits; the
// remaining codes are kept opaque.
const std::set<int>& default_allowed_codes();

// System-posted narratives excluded from analysis.
const std::vector<std::string>& default_narrative_blocklist();

// Required columns: account_no, sanction_limit. Optional: title, sector,
// sanction_authority, disburse_date, status, principal_amount, adjusted,
// score. Throws MalformedRowError or Error(kDuplicateAccount).
std::vector<AccountProfile> parse_accounts(std::istream& source,
                                           char delimiter = ',');

// Required columns: account_no, tx_date, tx_type_code, side. Optional:
// amount (empty means 0), system_generated (default false), narrative.
std::vector<TransactionRecord> parse_transactions(std::istream& source,
                                                  char delimiter = ',');

// Active accounts whose disburse date falls inside `window`.
std::vector<AccountProfile> select_active_window(
    std::span<const AccountProfile> accounts, const WindowSpec& window);

// Keeps records with an allowed code, a date inside `window`, no system flag
// and no narrative matching `narrative_blocklist` (case-insensitive
// substring). Order is preserved.
std::vector<TransactionRecord> filter_transactions(
    std::span<const TransactionRecord> records,
    const std::set<int>& allowed_codes, const WindowSpec& window,
    std::span<const std::string> narrative_blocklist = {});

}  // namespace lendtree

#endif  // LENDTREE_INGEST_HPP_
