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

#ifndef GCNATTACK_GCN_HPP_
#define GCNATTACK_GCN_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gcnattack/graph.hpp"

namespace gcnattack {

// Two-layer GCN: logits = A-hat * relu(A-hat * X * W0) * W1.
struct GcnModel {
  Eigen::MatrixXd w0;  // d x h
  Eigen::MatrixXd w1;  // h x L
  NormalizationMode mode = NormalizationMode::kRowWise;
  std::uint64_t seed = 0;

  int num_features() const { return static_cast<int>(w0.rows()); }
  int hidden() const { return static_cast<int>(w0.cols()); }
  int num_classes() const { return static_cast<int>(w1.cols()); }
  bool operator==(const GcnModel&) const = default;
};

// Uniform(+-sqrt(6 / (fan_in + fan_out))) initialization.
GcnModel init_model(int num_features, int hidden, int num_classes,
                    NormalizationMode mode, std::uint64_t seed);

struct ForwardTrace {
  NormalizedAdjacency adjacency;
  Eigen::MatrixXd xw;          // X' W0
  Eigen::MatrixXd hidden_pre;  // A-hat X' W0
  Eigen::MatrixXd hidden;      // relu(hidden_pre)
  Eigen::MatrixXd hw;          // hidden W1
  Eigen::MatrixXd logits;      // A-hat hidden W1
  Eigen::MatrixXd probabilities;
};

ForwardTrace forward(const GcnModel& model, const SparseMatrix& adjacency,
                     const SparseMatrix& features);
ForwardTrace forward(const GcnModel& model, const AugmentedGraph& aug);

// Row-wise softmax, max-shifted.
Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits);

// Index of the largest entry in a row; ties go to the lowest index.
int row_argmax(const Eigen::MatrixXd& m, Eigen::Index row);
std::vector<int> predictions(const Eigen::MatrixXd& logits);

enum class Optimizer { kGradientDescent, kAdam };

std::string to_string(Optimizer optimizer);
Optimizer parse_optimizer(std::string_view text);

struct TrainConfig {
  double learning_rate = 0.01;
  int epochs = 200;
  double weight_decay = 5e-4;  // applied to W0 only
  int hidden = 16;
  std::uint64_t seed = 0;
  Optimizer optimizer = Optimizer::kAdam;
};

// Full-batch training on mean cross-entropy of the softmax rows over
// `labeled` (node, class) pairs. Deterministic for a fixed config.
GcnModel train(const SparseMatrix& adjacency, const SparseMatrix& features,
               const std::vector<std::pair<int, int>>& labeled,
               int num_classes, NormalizationMode mode,
               const TrainConfig& config);

// Trains on the assembled graph. Labeled set is the base train mask, plus the
// labeled fakes when include_fake_labels is set (poisoning).
GcnModel train(const AugmentedGraph& aug, NormalizationMode mode,
               const TrainConfig& config, bool include_fake_labels);
GcnModel train(const Graph& graph, NormalizationMode mode,
               const TrainConfig& config);

// Mean cross-entropy over `labeled`, without the weight-decay term.
double cross_entropy(const Eigen::MatrixXd& probabilities,
                     const std::vector<std::pair<int, int>>& labeled);

// A scalar function of the logits and its gradient with respect to them.
struct ObjectiveValue {
  double value = 0.0;
  Eigen::MatrixXd grad_logits;
};
using Objective = std::function<ObjectiveValue(const Eigen::MatrixXd&)>;

struct InputGradients {
  Eigen::MatrixXd b;       // m x n
  Eigen::MatrixXd c;       // m x m, zero diagonal
  Eigen::MatrixXd x_fake;  // m x d
};

struct GradientRequest {
  bool edges = true;
  bool features = true;
};

// Exact derivatives of J with respect to every fake-block entry, treating an
// edge entry as the joint symmetric perturbation A'[i][j] = A'[j][i] and
// differentiating through the degree normalization. ReLU'(0) = 0.
InputGradients input_gradients(const GcnModel& model, const AugmentedGraph& aug,
                               const Objective& objective,
                               GradientRequest request = {});

// Same, reusing a forward pass over `aug` and dJ/dlogits.
InputGradients input_gradients(const GcnModel& model, const AugmentedGraph& aug,
                               const ForwardTrace& trace,
                               const Eigen::MatrixXd& grad_logits,
                               GradientRequest request = {});

// Text tensor dump: header line, mode, seed, then W0 and W1 row by row with
// 17 significant digits so load(save(m)) == m.
void save_model(const GcnModel& model, const std::string& path);
GcnModel load_model(const std::string& path);

}  // namespace gcnattack

#endif  // GCNATTACK_GCN_HPP_
