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

#ifndef GCNATTACK_DATA_IO_HPP_
#define GCNATTACK_DATA_IO_HPP_

#include <cstdint>
#include <string>

#include "gcnattack/graph.hpp"

namespace gcnattack {

// Stochastic block model with class-correlated binary features. Node v
// belongs to block v / nodes_per_block; each block owns a contiguous slice of
// feature dimensions that fire with feature_on, all others with feature_off.
struct SyntheticSpec {
  int blocks = 2;
  int nodes_per_block = 50;
  double p_in = 0.1;
  double p_out = 0.01;
  int num_features = 32;
  double feature_on = 0.3;
  double feature_off = 0.02;
};

enum class DatasetKind { kCora, kCiteseer, kNative, kSynthetic };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::kSynthetic;
  std::string path;  // directory for cora/citeseer/native
  std::uint64_t split_seed = 0;
  double labeled_fraction = 0.20;
  SyntheticSpec synthetic;  // used for kSynthetic (seeded by split_seed)
};

DatasetKind parse_dataset_kind(const std::string& text);
std::string to_string(DatasetKind kind);

struct LoadReport {
  long dangling_edges = 0;   // endpoints missing from the content file
  long self_loops = 0;       // dropped
  long duplicate_edges = 0;  // including reversed duplicates
  long binarized_values = 0; // non-0/1 feature values mapped to 1
};

// Loads a dataset and applies a stratified, seeded labeled/unlabeled split
// (labeled = train mask, the rest = test mask). A native graph keeps its own
// masks.
Graph load(const DatasetSpec& spec, LoadReport* report = nullptr);

// Reads `<dir>/<name>.content` (id, features..., label) and
// `<dir>/<name>.cites` (two ids per line). Classes are numbered in sorted
// order of their names. Masks are all false.
Graph load_planetoid(const std::string& dir, const std::string& name,
                     LoadReport* report = nullptr);

// For every class, round(fraction * count) nodes are labeled (at least one
// when the class is non-empty); the rest form the test mask.
Graph stratified_split(const Graph& graph, double fraction, std::uint64_t seed);

// Deterministic per seed; masks from stratified_split(…, 0.2, seed).
Graph generate(const SyntheticSpec& spec, std::uint64_t seed);

// Native directory format: meta, edges.tsv, features.tsv, labels.tsv,
// masks.tsv; augmented graphs add fake_edges.tsv, fake_features.tsv and
// fake_labels.tsv using indices of the assembled graph (fakes are n..n+m-1).
void save_graph(const Graph& graph, const std::string& dir);
Graph load_graph(const std::string& dir);
void save_augmented(const AugmentedGraph& aug, const std::string& dir);
AugmentedGraph load_augmented(const std::string& dir);

}  // namespace gcnattack

#endif  // GCNATTACK_DATA_IO_HPP_
