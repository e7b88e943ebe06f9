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

// Confidence-based (pessimistic) post-pruning with subtree replacement.

#ifndef LENDTREE_PRUNE_HPP_
#define LENDTREE_PRUNE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "lendtree/tree.hpp"

namespace lendtree {

struct PruneConfig {
  double confidence = 0.25;  // in (0, 0.5]
  bool enabled = true;
  // Added to the subtree estimate before comparing with the leaf estimate.
  double slack = 0.1;

  // Throws InvalidConfig when confidence or slack is out of range.
  void validate() const;
};

// Upper confidence bound on the number of errors among `coverage` rows of
// which `misclassified` are wrong. Zero errors use the exact binomial bound
// coverage * (1 - confidence^(1/coverage)); otherwise the Wilson score upper
// bound at z = Phi^-1(1 - confidence) is scaled by coverage. Throws
// InvalidCounts unless coverage >= 1 and misclassified <= coverage, and
// InvalidConfig for a confidence outside (0, 0.5].
double pessimistic_error(std::size_t coverage, std::size_t misclassified,
                         double confidence);

// Sum of leaf estimates; empty leaves contribute nothing.
double estimated_subtree_error(const DecisionNode& tree, double confidence);

struct PruneDecision {
  std::string path;  // "a = x / b = y", empty at the root
  std::size_t coverage = 0;
  double leaf_error = 0.0;
  double subtree_error = 0.0;
  bool replaced = false;

  std::string to_text() const;
};

// Bottom-up: children are pruned first, then an internal node is replaced by
// a leaf carrying its majority class and full training distribution when the
// leaf estimate is <= subtree estimate + slack. Decisions are appended to
// `log` in visit order when it is non-null. Returns `tree` unchanged when
// pruning is disabled.
DecisionNode prune_tree(const DecisionNode& tree, const PruneConfig& config,
                        std::vector<PruneDecision>* log = nullptr);

}  // namespace lendtree

#endif  // LENDTREE_PRUNE_HPP_
