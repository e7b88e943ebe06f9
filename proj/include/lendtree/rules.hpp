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

#ifndef LENDTREE_RULES_HPP_
#define LENDTREE_RULES_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lendtree/tree.hpp"

namespace lendtree {

// IF a1 = v1 AND ... THEN Class_Label = consequent.
struct Rule {
  std::vector<Condition> antecedents;  // root-to-leaf order
  ClassLabel consequent = ClassLabel::kBad;
  std::size_t coverage = 0;
  std::size_t misclassified = 0;

  bool matches(const Instance& row) const;

  bool operator==(const Rule&) const = default;
};

// One rule per leaf, in left-to-right leaf order.
std::vector<Rule> extract_rules(const DecisionNode& tree);

struct RuleMatch {
  ClassLabel label = ClassLabel::kBad;
  std::optional<std::size_t> rule_index;  // none when the fallback fired
  bool fallback = false;
};

// Consequent of the first matching rule (rules from one complete tree are
// mutually exclusive). Without a match, returns the consequent with the
// largest total coverage when `fallback` is set, or throws NoMatch.
RuleMatch classify_with_rules(std::span<const Rule> rules, const Instance& row,
                              bool fallback = true);

std::string render_rule(const Rule& rule);

// One rendered rule per line.
std::string render_rules(std::span<const Rule> rules);

// Columns: rule, antecedents, consequent, coverage, misclassified.
void write_rules_table(std::ostream& out, std::span<const Rule> rules,
                       char delimiter = ',');

}  // namespace lendtree

#endif  // LENDTREE_RULES_HPP_
