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

#include "lendtree/prune.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <boost/math/distributions/normal.hpp>

#include "lendtree/error.hpp"

namespace lendtree {
namespace {

void check_confidence(double confidence) {
  if (!(confidence > 0.0 && confidence <= 0.5)) {
    throw Error(ErrorCode::kInvalidConfig, "confidence must be in (0, 0.5]");
  }
}

// One-sided normal deviate with upper tail probability `confidence`.
double z_for(double confidence) {
  static const boost::math::normal standard;
  return boost::math::quantile(standard, 1.0 - confidence);
}

struct Pruner {
  const PruneConfig& config;
  std::vector<PruneDecision>* log;

  DecisionNode prune(const DecisionNode& node, const std::string& path) const {
    if (node.is_leaf()) return node;
    DecisionNode out = node;
    for (DecisionNode& child : out.children) {
      std::string child_path = path.empty() ? "" : path + " / ";
      child_path += node.attribute + " = " + child.arc.value_or("");
      child = prune(child, child_path);
    }
    PruneDecision d;
    d.path = path;
    d.coverage = out.coverage();
    d.leaf_error = d.coverage == 0 ? 0.0
                                   : pessimistic_error(d.coverage, out.misclassified(),
                                                       config.confidence);
    d.subtree_error = estimated_subtree_error(out, config.confidence);
    d.replaced = d.leaf_error <= d.subtree_error + config.slack;
    if (log) log->push_back(d);
    if (d.replaced) {
      out.attribute.clear();
      out.children.clear();
    }
    return out;
  }
};

}  // namespace

void PruneConfig::validate() const {
  check_confidence(confidence);
  if (!std::isfinite(slack) || slack < 0.0) {
    throw Error(ErrorCode::kInvalidConfig, "prune slack must be >= 0");
  }
}

double pessimistic_error(std::size_t coverage, std::size_t misclassified,
                         double confidence) {
  check_confidence(confidence);
  if (coverage == 0 || misclassified > coverage) {
    throw Error(ErrorCode::kInvalidCounts,
                "need coverage >= 1 and misclassified <= coverage, got " +
                    std::to_string(coverage) + "/" + std::to_string(misclassified));
  }
  const double n = static_cast<double>(coverage);
  if (misclassified == 0) return n * (1.0 - std::pow(confidence, 1.0 / n));
  if (misclassified == coverage) return n;
  const double f = misclassified / n;
  const double z = z_for(confidence);
  const double z2 = z * z;
  const double bound =
      (f + z2 / (2 * n) + z * std::sqrt(f / n - f * f / n + z2 / (4 * n * n))) /
      (1 + z2 / n);
  return std::clamp(n * bound, static_cast<double>(misclassified), n);
}

double estimated_subtree_error(const DecisionNode& tree, double confidence) {
  if (tree.is_leaf()) {
    if (tree.coverage() == 0) return 0.0;
    return pessimistic_error(tree.coverage(), tree.misclassified(), confidence);
  }
  double sum = 0.0;
  for (const DecisionNode& c : tree.children) sum += estimated_subtree_error(c, confidence);
  return sum;
}

std::string PruneDecision::to_text() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=%zu leaf=%.6f subtree=%.6f %s", coverage,
                leaf_error, subtree_error, replaced ? "replaced" : "kept");
  return (path.empty() ? std::string("<root>") : path) + ": " + buf;
}

DecisionNode prune_tree(const DecisionNode& tree, const PruneConfig& config,
                        std::vector<PruneDecision>* log) {
  config.validate();
  if (!config.enabled) return tree;
  return Pruner{config, log}.prune(tree, "");
}

}  // namespace lendtree
