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

#include "lendtree/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <unordered_set>

#include "lendtree/error.hpp"
#include "lendtree/table.hpp"
#include "parse_util.hpp"

namespace lendtree {
namespace {

using std::chrono::day;
using std::chrono::month;
using std::chrono::months;
using std::chrono::sys_days;
using std::chrono::year;
using std::chrono::year_month_day_last;

std::size_t require_column(const Table& table, std::string_view name) {
  if (auto index = table.column(name)) return *index;
  throw MalformedRowError(1, "missing required column '" + std::string(name) + "'");
}

const std::string* field(const TableRow& row, std::optional<std::size_t> col) {
  return col ? &row.fields[*col] : nullptr;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::optional<Date> parse_iso_date(std::string_view text) {
  const std::string t = trim(text);
  if (t.size() != 10 || t[4] != '-' || t[7] != '-') return std::nullopt;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
  }
  const int y = std::stoi(t.substr(0, 4));
  const unsigned m = static_cast<unsigned>(std::stoi(t.substr(5, 2)));
  const unsigned d = static_cast<unsigned>(std::stoi(t.substr(8, 2)));
  const Date date{year{y}, month{m}, day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_iso_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()));
  return buf;
}

Date add_months(Date date, int count) {
  const auto shifted = date.year() / date.month() + months{count};
  const Date last{year_month_day_last{shifted.year(),
                                      std::chrono::month_day_last{shifted.month()}}};
  return Date{shifted.year(), shifted.month(), std::min(date.day(), last.day())};
}

WindowSpec::WindowSpec(Date from, Date to) : from_date(from), to_date(to) {
  if (!from.ok() || !to.ok()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid window date");
  }
  if (to < from) {
    throw Error(ErrorCode::kInvalidArgument,
                "window starts " + format_iso_date(from) + " after it ends " +
                    format_iso_date(to));
  }
}

WindowSpec observation_window(Date start, int months_count) {
  if (months_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "observation window needs >= 1 month");
  }
  const Date end{sys_days{add_months(start, months_count)} - std::chrono::days{1}};
  return WindowSpec(start, end);
}

const std::set<int>& default_allowed_codes() {
  static const std::set<int> codes = {1,  2,  3,  4,  11, 12, 13, 18, 21,
                                      22, 23, 24, 25, 26, 27, 29, 30};
  return codes;
}

const std::vector<std::string>& default_narrative_blocklist() {
  static const std::vector<std::string> list = {
      "Incidental Charges", "Closing Charges",   "Service Charges",
      "Interest",           "Source Tax",        "Postage",
      "Inspection Charges", "Other Charges",     "Value Added Tax",
      "Commission",         "Insurance Premium", "Error Correction",
      "Miscellaneous Adjustment"};
  return list;
}

std::vector<AccountProfile> parse_accounts(std::istream& source, char delimiter) {
  const Table table = read_table(source, delimiter);
  const std::size_t account_col = require_column(table, "account_no");
  const std::size_t limit_col = require_column(table, "sanction_limit");
  const auto title_col = table.column("title");
  const auto sector_col = table.column("sector");
  const auto authority_col = table.column("sanction_authority");
  const auto date_col = table.column("disburse_date");
  const auto status_col = table.column("status");
  const auto principal_col = table.column("principal_amount");
  const auto adjusted_col = table.column("adjusted");
  const auto score_col = table.column("score");

  std::vector<AccountProfile> accounts;
  std::unordered_set<std::string> seen;
  for (const TableRow& row : table.rows) {
    AccountProfile a;
    a.account_no = row.fields[account_col];
    if (a.account_no.empty()) throw MalformedRowError(row.line, "empty account_no");
    const auto limit = detail::parse_double(row.fields[limit_col]);
    if (!limit || *limit <= 0.0) {
      throw MalformedRowError(row.line, "sanction_limit must be a positive number, got '" +
                                            row.fields[limit_col] + "'");
    }
    a.sanction_limit = *limit;
    if (auto f = field(row, title_col)) a.title = *f;
    if (auto f = field(row, sector_col)) a.sector = *f;
    if (auto f = field(row, authority_col)) a.sanction_authority = *f;
    if (auto f = field(row, date_col); f && !f->empty()) {
      a.disburse_date = parse_iso_date(*f);
      if (!a.disburse_date) {
        throw MalformedRowError(row.line, "bad disburse_date '" + *f + "'");
      }
    }
    if (auto f = field(row, status_col); f && !f->empty()) a.status = *f;
    if (auto f = field(row, principal_col); f && !f->empty()) {
      a.principal_amount = detail::parse_double(*f);
      if (!a.principal_amount || *a.principal_amount < 0.0) {
        throw MalformedRowError(row.line, "bad principal_amount '" + *f + "'");
      }
    }
    if (auto f = field(row, adjusted_col); f && !f->empty()) {
      a.adjusted = detail::parse_bool(*f);
      if (!a.adjusted) throw MalformedRowError(row.line, "bad adjusted flag '" + *f + "'");
    }
    if (auto f = field(row, score_col); f && !f->empty()) {
      a.score = detail::parse_double(*f);
      if (!a.score) throw MalformedRowError(row.line, "bad score '" + *f + "'");
    }
    if (!seen.insert(a.account_no).second) {
      throw Error(ErrorCode::kDuplicateAccount,
                  "line " + std::to_string(row.line) + ": duplicate account " +
                      a.account_no);
    }
    accounts.push_back(std::move(a));
  }
  return accounts;
}

std::vector<TransactionRecord> parse_transactions(std::istream& source,
                                                  char delimiter) {
  const Table table = read_table(source, delimiter);
  const std::size_t account_col = require_column(table, "account_no");
  const std::size_t date_col = require_column(table, "tx_date");
  const std::size_t code_col = require_column(table, "tx_type_code");
  const std::size_t side_col = require_column(table, "side");
  const auto amount_col = table.column("amount");
  const auto system_col = table.column("system_generated");
  const auto narrative_col = table.column("narrative");

  std::vector<TransactionRecord> records;
  records.reserve(table.rows.size());
  for (const TableRow& row : table.rows) {
    TransactionRecord r;
    r.account_no = row.fields[account_col];
    if (r.account_no.empty()) throw MalformedRowError(row.line, "empty account_no");
    const auto date = parse_iso_date(row.fields[date_col]);
    if (!date) {
      throw MalformedRowError(row.line, "bad tx_date '" + row.fields[date_col] + "'");
    }
    r.tx_date = *date;
    const auto code = detail::parse_integer<int>(row.fields[code_col]);
    if (!code) {
      throw MalformedRowError(row.line,
                              "bad tx_type_code '" + row.fields[code_col] + "'");
    }
    r.tx_type_code = *code;
    const std::string side = lowercase(row.fields[side_col]);
    if (side == "debit" || side == "dr" || side == "d") {
      r.side = Side::kDebit;
    } else if (side == "credit" || side == "cr" || side == "c") {
      r.side = Side::kCredit;
    } else {
      throw MalformedRowError(row.line, "bad side '" + row.fields[side_col] + "'");
    }
    if (auto f = field(row, amount_col); f && !f->empty() && !iequals(*f, "null")) {
      const auto amount = detail::parse_double(*f);
      if (!amount || *amount < 0.0) {
        throw MalformedRowError(row.line, "bad amount '" + *f + "'");
      }
      r.amount = *amount;
    }
    if (auto f = field(row, system_col); f && !f->empty()) {
      const auto flag = detail::parse_bool(*f);
      if (!flag) throw MalformedRowError(row.line, "bad system_generated '" + *f + "'");
      r.system_generated = *flag;
    }
    if (auto f = field(row, narrative_col)) r.narrative = *f;
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<AccountProfile> select_active_window(
    std::span<const AccountProfile> accounts, const WindowSpec& window) {
  std::vector<AccountProfile> out;
  for (const AccountProfile& a : accounts) {
    if (!iequals(a.status, "Active")) continue;
    if (!a.disburse_date || !window.contains(*a.disburse_date)) continue;
    out.push_back(a);
  }
  return out;
}

std::vector<TransactionRecord> filter_transactions(
    std::span<const TransactionRecord> records,
    const std::set<int>& allowed_codes, const WindowSpec& window,
    std::span<const std::string> narrative_blocklist) {
  if (allowed_codes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "allowed transaction codes are empty");
  }
  std::vector<std::string> blocked;
  for (const std::string& b : narrative_blocklist) {
    if (!b.empty()) blocked.push_back(lowercase(b));
  }
  std::vector<TransactionRecord> out;
  for (const TransactionRecord& r : records) {
    if (r.system_generated) continue;
    if (!allowed_codes.contains(r.tx_type_code)) continue;
    if (!window.contains(r.tx_date)) continue;
    if (!blocked.empty() && !r.narrative.empty()) {
      const std::string text = lowercase(r.narrative);
      const bool hit = std::any_of(blocked.begin(), blocked.end(), [&](const std::string& b) {
        return text.find(b) != std::string::npos;
      });
      if (hit) continue;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace lendtree
