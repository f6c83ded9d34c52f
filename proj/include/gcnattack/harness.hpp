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

#ifndef GCNATTACK_HARNESS_HPP_
#define GCNATTACK_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcnattack/data_io.hpp"
#include "gcnattack/gan.hpp"
#include "gcnattack/gcn.hpp"
#include "gcnattack/greedy.hpp"
#include "gcnattack/objectives.hpp"

namespace gcnattack {

enum class AttackKind { kNone, kRandom, kGreedy, kGreedyGan };
enum class GoalKind { kNonTargeted, kTargetedWhole, kTargetedSingle };
enum class EvalMode { kEvasion, kPoisoning };

std::string to_string(AttackKind kind);
std::string to_string(GoalKind kind);
std::string to_string(EvalMode mode);
AttackKind parse_attack_kind(const std::string& text);
GoalKind parse_goal_kind(const std::string& text);
EvalMode parse_eval_mode(const std::string& text);

struct ExperimentConfig {
  DatasetSpec dataset;
  NormalizationMode mode = NormalizationMode::kRowWise;
  AttackKind attack = AttackKind::kGreedy;
  GoalKind goal = GoalKind::kNonTargeted;
  EvalMode eval = EvalMode::kEvasion;

  double fake_fraction = 0.20;    // m = ceil(fraction * n)
  double fake_label_rate = 0.25;  // labeled share of the fakes
  // Budget: `budget` units when >= 0, else round(flips_per_fake * m).
  long budget = -1;
  double flips_per_fake = 20.0;
  int edge_ratio = 1;
  int feature_ratio = 1;

  // Initial fake state: Bernoulli features (density <= 0 means the mean
  // density of the real feature matrix) and random fake-to-real edges.
  double init_feature_density = -1.0;
  int init_edges_per_fake = 0;

  // Targeted-single: explicit (node, class), or `single_pairs` sampled pairs.
  int single_node = -1;
  int single_target = -1;
  int single_pairs = 50;
  int single_fakes = 3;
  double single_flips_per_fake = 30.0;
  bool stop_on_success = true;

  TrainConfig train;
  int retrain_epochs = 200;
  GanConfig gan;
  bool detectability = true;  // F1 of the final X_fake for attacked runs
  DetectorConfig detector;

  std::vector<std::uint64_t> seeds = {0};
};

// Throws ConfigError describing the first invalid field.
void validate(const ExperimentConfig& cfg);

// Key-value text form (`key = value`, '#' comments). Every field above has a
// key; see config_keys().
std::map<std::string, std::string> to_key_values(const ExperimentConfig& cfg);
void apply_key_value(ExperimentConfig& cfg, const std::string& key,
                     const std::string& value);
ExperimentConfig read_config_file(const std::string& path,
                                  ExperimentConfig base = {});
std::vector<std::string> config_keys();
std::string config_digest(const ExperimentConfig& cfg);

struct SeedResult {
  std::uint64_t seed = 0;
  double clean = 0.0;     // accuracy or success rate before the attack
  double attacked = 0.0;  // same metric after the attack
  std::optional<double> f1;
  long budget = 0;       // units allowed
  long budget_used = 0;  // flips performed
  long edge_units = 0;   // net nonzeros in B, C (edges counted once)
  long feature_units = 0;
  double edges_per_fake = 0.0;
  double features_per_fake = 0.0;
  double wall_seconds = 0.0;
  std::uint64_t graph_digest = 0;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for one seed
};
Summary summarize(const std::vector<double>& values);

struct ResultRecord {
  std::string label;
  std::string config_digest;
  ExperimentConfig config;
  std::vector<SeedResult> per_seed;
  Summary clean;
  Summary attacked;
  std::optional<Summary> f1;

  void aggregate();
};

// Everything one (config, seed) cell produced; kept for follow-up analyses.
// Split and clean model of one seed, shared by every attack on that seed.
struct CleanModel {
  Graph graph;
  GcnModel model;
  double accuracy = 0.0;  // test-mask accuracy
};
CleanModel train_clean(const ExperimentConfig& cfg, std::uint64_t seed);

struct CellOutput {
  SeedResult result;
  Graph graph;
  AugmentedGraph attacked;
  AttackTrace trace;
  std::vector<int> clean_predictions;     // real nodes
  std::vector<int> attacked_predictions;  // real nodes
};

// Runs one seed of a non-targeted or whole-graph targeted experiment.
CellOutput run_cell(const ExperimentConfig& cfg, std::uint64_t seed);

ResultRecord run_nontargeted(const ExperimentConfig& cfg);
ResultRecord run_targeted_whole(const ExperimentConfig& cfg);
ResultRecord run_targeted_single(const ExperimentConfig& cfg);
// Dispatches on cfg.goal.
ResultRecord run_experiment(const ExperimentConfig& cfg);

enum class SweepAxis { kFakeFraction, kLabelRate, kBudget, kCoefficient };
std::string to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(const std::string& text);
std::vector<double> default_sweep_values(SweepAxis axis);
// One record per value, every record using cfg.seeds. kBudget sets
// flips_per_fake.
std::vector<ResultRecord> sweep(const ExperimentConfig& cfg, SweepAxis axis,
                                const std::vector<double>& values);

struct DegreeBucket {
  int lo = 0;
  int hi = 0;  // inclusive; -1 means unbounded
  long nodes = 0;
  double flip_rate = 0.0;  // prediction changed by the attack
  double clean_accuracy = 0.0;
  double attacked_accuracy = 0.0;
};

// Buckets real nodes by clean degree and reports the attack's effect per
// bucket. Default edges: {0}, {1}, {2}, {3}, {4-5}, {6-9}, {10+}; buckets
// without nodes are dropped.
std::vector<DegreeBucket> degree_analysis(const CellOutput& cell);
std::vector<DegreeBucket> degree_analysis(
    const Graph& graph, const std::vector<int>& clean_predictions,
    const std::vector<int>& attacked_predictions);

struct AblationResult {
  ResultRecord edges_only;
  ResultRecord features_only;
  ResultRecord both;
};
// Greedy from a random-initialized augmentation, updating only edges, only
// features, or both, at the same budget.
AblationResult ablate_features_vs_edges(const ExperimentConfig& cfg);

struct NormalizationComparison {
  ResultRecord rowwise;
  ResultRecord symmetric;
};
NormalizationComparison compare_normalizations(const ExperimentConfig& cfg);

// results.csv: one row per (record, seed).
void write_results_csv(const std::vector<ResultRecord>& records,
                       std::ostream& out);
void write_results_csv(const std::vector<ResultRecord>& records,
                       const std::string& path);
// Plot data: x, mean, stddev of the attacked metric.
void write_plot_csv(const std::vector<double>& xs,
                    const std::vector<ResultRecord>& records,
                    const std::string& path);
void write_degree_csv(const std::vector<DegreeBucket>& buckets,
                      const std::string& path);

}  // namespace gcnattack

#endif  // GCNATTACK_HARNESS_HPP_
