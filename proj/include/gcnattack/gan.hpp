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

#ifndef GCNATTACK_GAN_HPP_
#define GCNATTACK_GAN_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "gcnattack/gcn.hpp"
#include "gcnattack/graph.hpp"
#include "gcnattack/greedy.hpp"
#include "gcnattack/objectives.hpp"

namespace gcnattack {

// Real/fake classifier over feature rows: softmax(relu(X V0) V1).
// Column 1 of the output is the probability that a row is fake.
struct Discriminator {
  Eigen::MatrixXd v0;  // d x h_D
  Eigen::MatrixXd v1;  // h_D x 2
  bool operator==(const Discriminator&) const = default;
};

Discriminator init_discriminator(int num_features, int hidden,
                                 std::uint64_t seed);

// (rows x 2) class probabilities.
Eigen::MatrixXd discriminator_forward(const Discriminator& d,
                                      const SparseMatrix& features);

// Summed binary cross-entropy with p = fake-class probability, clamped to
// [1e-12, 1 - 1e-12]. `is_fake[k]` is 1 for fake rows.
double discriminator_loss(const Eigen::MatrixXd& probabilities,
                          const std::vector<std::uint8_t>& is_fake);

// d/dX of the summed loss for the given labels, restricted to `rows`
// (a contiguous block starting at `first_row`).
Eigen::MatrixXd discriminator_input_gradient(
    const Discriminator& d, const SparseMatrix& features,
    const std::vector<std::uint8_t>& is_fake, Eigen::Index first_row,
    Eigen::Index rows);

struct DiscriminatorTraining {
  int iterations = 10;
  double learning_rate = 0.01;
  Optimizer optimizer = Optimizer::kAdam;
  // Weight the two classes equally in the mean loss.
  bool balance_classes = true;
};

// Descends the (mean) cross-entropy in the discriminator's own weights.
// Throws ConfigError unless both classes are present.
Discriminator train_discriminator(Discriminator d, const SparseMatrix& features,
                                  const std::vector<std::uint8_t>& is_fake,
                                  const DiscriminatorTraining& training);

// Real/fake indicator for an augmented graph: n zeros then m ones.
std::vector<std::uint8_t> real_fake_labels(const AugmentedGraph& aug);

struct GanConfig {
  double coefficient = 1.0;  // c
  long greedy_steps = 10000;  // retrain D when iteration % greedy_steps == 0
  int hidden = 32;
  DiscriminatorTraining training;
  std::uint64_t seed = 0;
  bool allow_drops = true;
  bool compare_gain = false;  // see detail::EngineConfig::compare_gain
  bool retrain = true;
  bool skip_initial_retrain = false;
};

// The attacker's discriminator term: D scored against every node being
// real, i.e. the loss the attacker wants small.
double attacker_loss(const Discriminator& d, const AugmentedGraph& aug);

// phi = J - c * attacker_loss.
double combined_objective(const AugmentedGraph& aug, const GcnModel& model,
                          const Discriminator& d, const AttackGoal& goal,
                          double coefficient);

struct GanAttackResult {
  AugmentedGraph graph;
  Discriminator discriminator;
  AttackTrace trace;
};

// Greedy add/drop search on phi with periodic discriminator retraining.
// Every flip takes the larger-|gradient| of the best add (zero entry, max
// gradient) and best drop (one entry, min gradient) in its block.
GanAttackResult greedy_gan_attack(AugmentedGraph aug, const GcnModel& model,
                                  const AttackGoal& goal, const Budget& budget,
                                  const GanConfig& config,
                                  const GreedyOptions& options = {});

struct DetectorConfig {
  int hidden = 32;
  int epochs = 200;
  double learning_rate = 0.01;
  // Bernoulli density of the random "fake" training rows; <= 0 uses the mean
  // feature density of the real graph.
  double density = 0.0;
};

// Trains an independent discriminator on real feature rows (real) versus an
// equal number of random Bernoulli rows (fake), then scores the union of the
// real rows and `x_fake`. Returns the F1 of the fake class.
double detectability_f1(const BitMatrix& x_fake, const Graph& real,
                        std::uint64_t seed, const DetectorConfig& config = {});

// F1 of class 1 for binary predictions.
double f1_score(const std::vector<std::uint8_t>& truth,
                const std::vector<std::uint8_t>& predicted);

}  // namespace gcnattack

#endif  // GCNATTACK_GAN_HPP_
