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

#include "lendtree/rules.hpp"

#include <ostream>
#include <sstream>

#include "lendtree/error.hpp"
#include "lendtree/table.hpp"

namespace lendtree {
namespace {

void collect(const DecisionNode& node, std::vector<Condition>& path,
             std::vector<Rule>& rules) {
  if (node.is_leaf()) {
    rules.push_back(Rule{path, node.label, node.coverage(), node.misclassified()});
    return;
  }
  for (const DecisionNode& child : node.children) {
    path.push_back({node.attribute, child.arc.value_or("")});
    collect(child, path, rules);
    path.pop_back();
  }
}

std::string antecedent_text(const Rule& rule) {
  if (rule.antecedents.empty()) return "true";
  std::string out;
  for (const Condition& c : rule.antecedents) {
    if (!out.empty()) out += " AND ";
    out += c.attribute + " = " + c.value;
  }
  return out;
}

}  // namespace

bool Rule::matches(const Instance& row) const {
  for (const Condition& c : antecedents) {
    const auto it = row.find(c.attribute);
    if (it == row.end() || it->second != c.value) return false;
  }
  return true;
}

std::vector<Rule> extract_rules(const DecisionNode& tree) {
  std::vector<Rule> rules;
  std::vector<Condition> path;
  collect(tree, path, rules);
  return rules;
}

RuleMatch classify_with_rules(std::span<const Rule> rules, const Instance& row,
                              bool fallback) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].matches(row)) return RuleMatch{rules[i].consequent, i, false};
  }
  if (!fallback || rules.empty()) {
    throw Error(ErrorCode::kNoMatch, "no rule matches the row");
  }
  ClassCounts coverage{};
  for (const Rule& r : rules) coverage[class_index(r.consequent)] += r.coverage;
  return RuleMatch{majority(coverage), std::nullopt, true};
}

std::string render_rule(const Rule& rule) {
  std::ostringstream out;
  out << "IF " << antecedent_text(rule)
      << " THEN Class_Label = " << class_display_name(rule.consequent) << " ("
      << rule.coverage << '/' << rule.misclassified << ')';
  return out.str();
}

std::string render_rules(std::span<const Rule> rules) {
  std::string out;
  for (const Rule& r : rules) out += render_rule(r) + '\n';
  return out;
}

void write_rules_table(std::ostream& out, std::span<const Rule> rules,
                       char delimiter) {
  write_table_row(out, {"rule", "antecedents", "consequent", "coverage", "misclassified"},
                  delimiter);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    write_table_row(out,
                    {std::to_string(i + 1), antecedent_text(r),
                     std::string(class_name(r.consequent)), std::to_string(r.coverage),
                     std::to_string(r.misclassified)},
                    delimiter);
  }
}

}  // namespace lendtree
