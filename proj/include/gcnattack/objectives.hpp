// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCNATTACK_OBJECTIVES_HPP_
#define GCNATTACK_OBJECTIVES_HPP_

#include <Eigen/Dense>

#include <map>
#include <variant>
#include <vector>

#include "gcnattack/gcn.hpp"

namespace gcnattack {

// Misclassify every real node.
struct NonTargeted {
  std::vector<int> labels;  // true label of each real node
};

// Push every node of S to its target class.
struct Targeted {
  std::map<int, int> targets;  // node -> target class; keys form S
};

using AttackGoal = std::variant<NonTargeted, Targeted>;

// Validates label ranges and that S is non-empty. Throws StructuralError.
void validate_goal(const AttackGoal& goal, int num_real, int num_classes);

// sum_i (max_j f_ij - f_i,y_i) over the real nodes; >= 0.
double nontargeted_objective(const Eigen::MatrixXd& logits,
                             const std::vector<int>& labels);
// sum_{i in S} (f_i,y*_i - max_j f_ij); <= 0.
double targeted_objective(const Eigen::MatrixXd& logits,
                          const std::map<int, int>& targets);

// Value and (argmax-row) subgradient of the goal's objective.
ObjectiveValue evaluate_objective(const Eigen::MatrixXd& logits,
                                  const AttackGoal& goal);
Objective make_objective(const AttackGoal& goal);

// True once every node of a targeted goal sits on its target.
bool goal_satisfied(const Eigen::MatrixXd& logits, const Targeted& goal);

// Fraction of test-mask real nodes whose argmax equals the true label.
double accuracy(const Eigen::MatrixXd& logits, const Graph& graph);
// Fraction of S whose argmax equals the target.
double success_rate(const Eigen::MatrixXd& logits, const Targeted& goal);
// accuracy for NonTargeted goals, success rate for Targeted ones.
double success_metric(const Eigen::MatrixXd& logits, const AttackGoal& goal,
                      const Graph& graph);

// Attacker budget. Every add or drop costs one unit; an undirected edge is one
// unit. Each greedy iteration performs `edge_ratio` edge flips followed by
// `feature_ratio` feature flips.
struct Budget {
  long total = 0;
  int edge_ratio = 1;
  int feature_ratio = 1;
};

// Throws ConfigError when ratios are negative or both zero, or total < 0.
void validate_budget(const Budget& budget);

}  // namespace gcnattack

#endif  // GCNATTACK_OBJECTIVES_HPP_
