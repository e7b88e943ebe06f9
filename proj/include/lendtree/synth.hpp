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

// Seeded generator of account and transaction tables. Sector behaviour
// profiles are illustrative and make no claim about any real loan book.

#ifndef LENDTREE_SYNTH_HPP_
#define LENDTREE_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lendtree/ingest.hpp"

namespace lendtree {

struct SectorProfile {
  std::string name;
  double weight = 1.0;    // relative share of accounts
  double quality = 0.5;   // expected share of debits repaid, in [0, 1.5]
  double activity = 3.0;  // expected credit vouchers per month, > 0
  double limit_min = 300000.0;
  double limit_max = 3500000.0;
};

struct SynthProfile {
  std::vector<SectorProfile> sectors;
  Date disburse_from{std::chrono::year{2013}, std::chrono::January,
                     std::chrono::day{1}};
  Date disburse_to{std::chrono::year{2013}, std::chrono::December,
                   std::chrono::day{31}};
  int window_months = 6;
  double inactive_share = 0.05;        // accounts with status Closed
  double system_posting_share = 0.10;  // extra interest/charge postings
  double foreign_code_share = 0.05;    // postings with a code outside the set
  double missing_amount_share = 0.02;  // amounts written as empty fields

  static SynthProfile defaults();

  // Keys: synth.<field> or synth.sector.<Name>.<field>; a new sector name
  // adds a sector. Throws InvalidProfile for unknown keys or bad values.
  void set(std::string_view key, std::string_view value);

  // Throws InvalidProfile.
  void validate() const;
};

struct SynthData {
  std::vector<AccountProfile> accounts;
  std::vector<TransactionRecord> transactions;
  // Indices into `transactions` written with an empty amount field.
  std::vector<std::size_t> missing_amounts;
};

// Deterministic for a given (profile, seed, n); n >= 1.
SynthData generate_synthetic(const SynthProfile& profile, std::uint64_t seed,
                             std::size_t n);

void write_accounts_table(std::ostream& out,
                          std::span<const AccountProfile> accounts,
                          char delimiter = ',');

// Rows listed in `missing_amounts` get an empty amount field.
void write_transactions_table(std::ostream& out,
                              std::span<const TransactionRecord> transactions,
                              std::span<const std::size_t> missing_amounts = {},
                              char delimiter = ',');

}  // namespace lendtree

#endif  // LENDTREE_SYNTH_HPP_
