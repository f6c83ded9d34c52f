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

#ifndef GCNATTACK_GREEDY_HPP_
#define GCNATTACK_GREEDY_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcnattack/gcn.hpp"
#include "gcnattack/graph.hpp"
#include "gcnattack/objectives.hpp"

namespace gcnattack {

struct TraceStep {
  long iteration = 0;
  BlockCoord coord;
  FlipDirection direction = FlipDirection::kAdd;
  double gradient = 0.0;  // d(objective)/d(entry) when selected
  // Gradient of the best opposite action (drop vs add); NaN when none existed.
  double alternative_gradient = 0.0;
  bool forced = false;  // the opposite candidate set was empty
  double j_before = 0.0;
  double j_after = 0.0;
  // Discriminator term (zero for plain Greedy); phi = J - c * L.
  double l_before = 0.0;
  double l_after = 0.0;
  double phi_before = 0.0;
  double phi_after = 0.0;
};

struct AttackTrace {
  std::vector<TraceStep> steps;
  bool stopped_early = false;
  std::string stop_reason;
  std::uint64_t final_digest = 0;
  bool has_discriminator_terms = false;

  long edge_flips() const;
  long feature_flips() const;
};

struct AttackResult {
  AugmentedGraph graph;
  AttackTrace trace;
};

struct GreedyOptions {
  // Targeted goals only: stop as soon as every node of S sits on its target.
  bool stop_on_success = false;
};

// Budgeted greedy insertion. Each flip adds the currently-zero entry with the
// largest gradient of J in its block (B and C share one candidate pool; ties
// go to the lowest linear index, B row-major before the upper triangle of C),
// and the gradient is recomputed after every flip.
AttackResult greedy_attack(AugmentedGraph aug, const GcnModel& model,
                           const AttackGoal& goal, const Budget& budget,
                           const GreedyOptions& options = {});

// Same budget schedule with uniformly random eligible additions.
AugmentedGraph random_attack(AugmentedGraph aug, const Budget& budget,
                             std::uint64_t seed);

// One CSV row per step. The short form has the columns
// t,block,row,col,grad,J_before,J_after; the extended form (chosen when the
// trace carries discriminator terms) adds action, forced, alt_grad and the
// Phi/L components.
void write_trace_csv(const AttackTrace& trace, std::ostream& out);
void write_trace_csv(const AttackTrace& trace, const std::string& path);

namespace detail {

// Shared greedy loop for Greedy and Greedy-GAN.
struct EngineConfig {
  bool allow_drops = false;
  // false: the larger |gradient| wins; true: the larger first-order gain
  // (g for an add, -g for a drop) wins.
  bool compare_gain = false;
  bool stop_on_success = false;
  double coefficient = 0.0;  // c in phi = J - c * L
  // Called at the start of each iteration (before its first flip).
  std::function<void(long iteration, const AugmentedGraph&)> before_iteration;
  // Value of L and dL/dX_fake (m x d) at the current state.
  std::function<double(const AugmentedGraph&)> loss_value;
  std::function<Eigen::MatrixXd(const AugmentedGraph&)> loss_feature_gradient;
};

AttackResult run_engine(AugmentedGraph aug, const GcnModel& model,
                        const AttackGoal& goal, const Budget& budget,
                        const EngineConfig& config);

struct Candidate {
  BlockCoord coord;
  double gradient = 0.0;
  bool valid = false;
};

// Argmax over zero entries (add) or argmin over one entries (drop) of the
// edge pool / the feature block. Ties go to the lowest linear index.
Candidate select_edge(const AugmentedGraph& aug, const Eigen::MatrixXd& grad_b,
                      const Eigen::MatrixXd& grad_c, FlipDirection direction);
Candidate select_feature(const AugmentedGraph& aug,
                         const Eigen::MatrixXd& grad_x,
                         FlipDirection direction);

}  // namespace detail
}  // namespace gcnattack

#endif  // GCNATTACK_GREEDY_HPP_
