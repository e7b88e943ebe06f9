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

#include "lendtree/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "lendtree/error.hpp"
#include "lendtree/table.hpp"
#include "parse_util.hpp"
#include "random.hpp"

namespace lendtree {
namespace {

[[noreturn]] void bad_profile(const std::string& message) {
  throw Error(ErrorCode::kInvalidProfile, message);
}

double profile_double(std::string_view key, std::string_view value) {
  const auto v = detail::parse_double(value);
  if (!v) bad_profile("invalid value '" + std::string(value) + "' for " + std::string(key));
  return *v;
}

double round_cents(double amount) { return std::round(amount * 100.0) / 100.0; }

// Narratives for postings the ingest filter is expected to drop.
constexpr std::array<const char*, 4> kSystemNarratives = {
    "Interest", "Incidental Charges", "Service Charges", "Source Tax"};

// CASH, CLEARING, PAY ORDER.
constexpr std::array<int, 3> kCustomerCodes = {1, 2, 11};
constexpr int kOtherDebitCode = 30;

struct AccountPlan {
  Date start;
  Date end;  // inclusive
  double limit;
  double quality;
  double activity;
};

Date random_date(detail::Rng& rng, Date from, Date to) {
  const auto a = std::chrono::sys_days(from);
  const auto b = std::chrono::sys_days(to);
  const auto span = static_cast<std::uint64_t>((b - a).count()) + 1;
  return Date(a + std::chrono::days(static_cast<long>(rng.below(span))));
}

// Poisson-like count with the given mean, from a binomial over 4x trials.
std::size_t draw_count(detail::Rng& rng, double mean) {
  const std::size_t trials = static_cast<std::size_t>(std::ceil(mean * 4.0)) + 1;
  const double p = mean / static_cast<double>(trials);
  std::size_t n = 0;
  for (std::size_t i = 0; i < trials; ++i) n += rng.chance(p) ? 1 : 0;
  return n;
}

}  // namespace

SynthProfile SynthProfile::defaults() {
  SynthProfile p;
  p.sectors = {
      {"Other", 0.25, 0.45, 2.0},
      {"RiceandFlowerMills", 0.20, 0.97, 6.0},
      {"RetailTraders", 0.20, 0.82, 4.0},
      {"WholeSeller", 0.20, 0.90, 5.0},
      {"BusinessmanIndustrialist", 0.15, 0.65, 3.0},
  };
  return p;
}

void SynthProfile::set(std::string_view key, std::string_view value_in) {
  const std::string value = trim(value_in);
  if (!key.starts_with("synth.")) bad_profile("unknown key " + std::string(key));
  const std::string_view k = key.substr(6);

  auto share = [&](double& field) { field = profile_double(key, value); };
  if (k == "disburse_from" || k == "disburse_to") {
    const auto d = parse_iso_date(value);
    if (!d) bad_profile("invalid date '" + value + "' for " + std::string(key));
    (k == "disburse_from" ? disburse_from : disburse_to) = *d;
  } else if (k == "window_months") {
    const auto v = detail::parse_integer<int>(value);
    if (!v) bad_profile("invalid value '" + value + "' for " + std::string(key));
    window_months = *v;
  } else if (k == "inactive_share") {
    share(inactive_share);
  } else if (k == "system_posting_share") {
    share(system_posting_share);
  } else if (k == "foreign_code_share") {
    share(foreign_code_share);
  } else if (k == "missing_amount_share") {
    share(missing_amount_share);
  } else if (k == "sectors") {
    // Restricts and reorders the sector list; unknown names get defaults.
    std::vector<SectorProfile> next;
    for (const std::string& name : detail::split(value, ';')) {
      if (name.empty()) continue;
      auto it = std::find_if(sectors.begin(), sectors.end(),
                             [&](const SectorProfile& s) { return s.name == name; });
      next.push_back(it != sectors.end() ? *it : SectorProfile{name});
    }
    sectors = std::move(next);
  } else if (k.starts_with("sector.")) {
    const std::string_view rest = k.substr(7);
    const std::size_t dot = rest.rfind('.');
    if (dot == std::string_view::npos || dot == 0) {
      bad_profile("unknown key " + std::string(key));
    }
    const std::string name(rest.substr(0, dot));
    const std::string_view field = rest.substr(dot + 1);
    auto it = std::find_if(sectors.begin(), sectors.end(),
                           [&](const SectorProfile& s) { return s.name == name; });
    SectorProfile* s = nullptr;
    if (it == sectors.end()) {
      sectors.push_back(SectorProfile{name});
      s = &sectors.back();
    } else {
      s = &*it;
    }
    const double v = profile_double(key, value);
    if (field == "weight") {
      s->weight = v;
    } else if (field == "quality") {
      s->quality = v;
    } else if (field == "activity") {
      s->activity = v;
    } else if (field == "limit_min") {
      s->limit_min = v;
    } else if (field == "limit_max") {
      s->limit_max = v;
    } else {
      bad_profile("unknown key " + std::string(key));
    }
  } else {
    bad_profile("unknown key " + std::string(key));
  }
}

void SynthProfile::validate() const {
  if (sectors.empty()) bad_profile("no sectors");
  std::set<std::string> names;
  double total_weight = 0.0;
  for (const SectorProfile& s : sectors) {
    if (s.name.empty()) bad_profile("empty sector name");
    if (!names.insert(s.name).second) bad_profile("duplicate sector " + s.name);
    if (!(s.weight >= 0.0)) bad_profile(s.name + ": weight must be >= 0");
    if (!(s.quality >= 0.0 && s.quality <= 1.5)) {
      bad_profile(s.name + ": quality must be in [0, 1.5]");
    }
    if (!(s.activity > 0.0)) bad_profile(s.name + ": activity must be > 0");
    if (!(s.limit_min > 0.0 && s.limit_min <= s.limit_max)) {
      bad_profile(s.name + ": need 0 < limit_min <= limit_max");
    }
    total_weight += s.weight;
  }
  if (!(total_weight > 0.0)) bad_profile("sector weights sum to zero");
  if (disburse_from > disburse_to) bad_profile("disburse_from is after disburse_to");
  if (window_months < 1 || window_months > 120) {
    bad_profile("window_months must be in [1, 120]");
  }
  for (double share : {inactive_share, system_posting_share, foreign_code_share,
                       missing_amount_share}) {
    if (!(share >= 0.0 && share <= 1.0)) bad_profile("shares must be in [0, 1]");
  }
}

SynthData generate_synthetic(const SynthProfile& profile, std::uint64_t seed,
                             std::size_t n) {
  profile.validate();
  if (n < 1) bad_profile("account count must be at least 1");

  detail::Rng rng(seed);
  double total_weight = 0.0;
  for (const SectorProfile& s : profile.sectors) total_weight += s.weight;

  SynthData data;
  data.accounts.reserve(n);
  char id[32];
  for (std::size_t i = 0; i < n; ++i) {
    const double pick = rng.uniform() * total_weight;
    std::size_t si = profile.sectors.size();
    double cumulative = 0.0;
    for (std::size_t s = 0; s < profile.sectors.size(); ++s) {
      if (profile.sectors[s].weight <= 0.0) continue;
      si = s;  // rounding can leave `pick` past the last bound
      cumulative += profile.sectors[s].weight;
      if (pick < cumulative) break;
    }
    const SectorProfile& sector = profile.sectors[si];

    AccountProfile a;
    std::snprintf(id, sizeof id, "2013%06zu", i + 1);
    a.account_no = id;
    a.title = sector.name + " customer " + std::to_string(i + 1);
    a.sector = sector.name;
    a.sanction_limit =
        std::round(rng.uniform(sector.limit_min, sector.limit_max) / 1000.0) * 1000.0;
    a.sanction_authority = a.sanction_limit > 2000000.0   ? "HO"
                           : a.sanction_limit > 1000000.0 ? "DO"
                                                          : "RO";
    a.disburse_date = random_date(rng, profile.disburse_from, profile.disburse_to);
    a.status = rng.chance(profile.inactive_share) ? "Closed" : "Active";

    const AccountPlan plan{*a.disburse_date,
                           observation_window(*a.disburse_date, profile.window_months).to_date,
                           a.sanction_limit,
                           std::clamp(sector.quality + rng.uniform(-0.2, 0.2), 0.0, 1.5),
                           sector.activity};

    std::vector<TransactionRecord> tx;
    auto post = [&](Date date, int code, Side side, double amount, bool system,
                    std::string narrative) {
      tx.push_back(TransactionRecord{a.account_no, date, code, side,
                                     round_cents(amount), system, std::move(narrative)});
    };

    const double drawdown = plan.limit * rng.uniform(0.6, 1.0);
    post(plan.start, kOtherDebitCode, Side::kDebit, drawdown, false, "Loan disbursement");
    double debits = drawdown;

    const double months = static_cast<double>(profile.window_months);
    const std::size_t withdrawals = draw_count(rng, months * 0.5);
    for (std::size_t w = 0; w < withdrawals; ++w) {
      const double amount = plan.limit * rng.uniform(0.01, 0.05);
      post(random_date(rng, plan.start, plan.end),
           kCustomerCodes[rng.below(kCustomerCodes.size())], Side::kDebit, amount,
           false, "Withdrawal");
      debits += amount;
    }

    const std::size_t credits = draw_count(rng, plan.activity * months);
    if (credits > 0) {
      std::vector<double> shares(credits);
      double share_sum = 0.0;
      for (double& s : shares) share_sum += (s = rng.uniform(0.5, 1.5));
      const double repaid = debits * plan.quality;
      for (double s : shares) {
        post(random_date(rng, plan.start, plan.end),
             kCustomerCodes[rng.below(kCustomerCodes.size())], Side::kCredit,
             repaid * s / share_sum, false, "Deposit");
      }
    }

    const std::size_t regular = tx.size();
    for (std::size_t j = 0; j < regular; ++j) {
      if (rng.chance(profile.system_posting_share)) {
        post(random_date(rng, plan.start, plan.end), 1, Side::kDebit,
             plan.limit * rng.uniform(0.001, 0.01), true,
             kSystemNarratives[rng.below(kSystemNarratives.size())]);
      }
      if (rng.chance(profile.foreign_code_share)) {
        post(random_date(rng, plan.start, plan.end), 99,
             rng.chance(0.5) ? Side::kDebit : Side::kCredit,
             plan.limit * rng.uniform(0.001, 0.02), false, "Transfer reversal");
      }
    }

    std::stable_sort(tx.begin(), tx.end(),
                     [](const TransactionRecord& x, const TransactionRecord& y) {
                       return x.tx_date < y.tx_date;
                     });
    for (TransactionRecord& r : tx) {
      if (rng.chance(profile.missing_amount_share)) {
        r.amount = 0.0;
        data.missing_amounts.push_back(data.transactions.size());
      }
      data.transactions.push_back(std::move(r));
    }
    data.accounts.push_back(std::move(a));
  }
  return data;
}

void write_accounts_table(std::ostream& out, std::span<const AccountProfile> accounts,
                          char delimiter) {
  write_table_row(out,
                  {"account_no", "title", "sector", "sanction_authority",
                   "sanction_limit", "disburse_date", "status"},
                  delimiter);
  for (const AccountProfile& a : accounts) {
    write_table_row(out,
                    {a.account_no, a.title, a.sector, a.sanction_authority,
                     detail::format_double(a.sanction_limit),
                     a.disburse_date ? format_iso_date(*a.disburse_date) : "",
                     a.status},
                    delimiter);
  }
}

void write_transactions_table(std::ostream& out,
                              std::span<const TransactionRecord> transactions,
                              std::span<const std::size_t> missing_amounts,
                              char delimiter) {
  const std::set<std::size_t> missing(missing_amounts.begin(), missing_amounts.end());
  write_table_row(out,
                  {"account_no", "tx_date", "tx_type_code", "side", "amount",
                   "system_generated", "narrative"},
                  delimiter);
  for (std::size_t i = 0; i < transactions.size(); ++i) {
    const TransactionRecord& r = transactions[i];
    write_table_row(out,
                    {r.account_no, format_iso_date(r.tx_date),
                     std::to_string(r.tx_type_code),
                     r.side == Side::kDebit ? "debit" : "credit",
                     missing.contains(i) ? "" : detail::format_double(r.amount),
                     r.system_generated ? "true" : "false", r.narrative},
                    delimiter);
  }
}

}  // namespace lendtree
