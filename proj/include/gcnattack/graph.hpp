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

#ifndef GCNATTACK_GRAPH_HPP_
#define GCNATTACK_GRAPH_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcnattack {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using BitMatrix =
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class NormalizationMode { kRowWise, kSymmetric };

std::string to_string(NormalizationMode mode);
NormalizationMode parse_normalization(std::string_view text);

// The original attributed graph. Immutable after construction; every
// constructor path validates symmetry, zero diagonal, binary entries, label
// range and mask disjointness.
class Graph {
 public:
  Graph() = default;

  // `edges` are undirected pairs in any order (duplicates collapse);
  // `features` are (node, dim) pairs of ones.
  Graph(int num_nodes, int num_features, int num_classes,
        std::span<const std::pair<int, int>> edges,
        std::span<const std::pair<int, int>> features, std::vector<int> labels,
        std::vector<std::uint8_t> train_mask,
        std::vector<std::uint8_t> test_mask);

  int num_nodes() const { return static_cast<int>(neighbors_.size()); }
  int num_features() const { return num_features_; }
  int num_classes() const { return num_classes_; }
  long num_edges() const { return num_edges_; }
  long num_feature_entries() const { return num_feature_entries_; }

  // Sorted adjacency and active-feature lists.
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  const std::vector<int>& active_features(int v) const { return features_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

  bool has_edge(int u, int v) const;
  bool has_feature(int v, int dim) const;

  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& train_mask() const { return train_mask_; }
  const std::vector<std::uint8_t>& test_mask() const { return test_mask_; }

  // Undirected edges (u < v) in ascending order.
  std::vector<std::pair<int, int>> edge_list() const;
  // (node, dim) ones in ascending order.
  std::vector<std::pair<int, int>> feature_list() const;

  Eigen::MatrixXd dense_adjacency() const;
  Eigen::MatrixXd dense_features() const;

  // Same topology and features, different split.
  Graph with_masks(std::vector<std::uint8_t> train_mask,
                   std::vector<std::uint8_t> test_mask) const;

  std::uint64_t digest() const;
  bool operator==(const Graph& other) const = default;

 private:
  int num_features_ = 0;
  int num_classes_ = 0;
  long num_edges_ = 0;
  long num_feature_entries_ = 0;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> features_;
  std::vector<int> labels_;
  std::vector<std::uint8_t> train_mask_;
  std::vector<std::uint8_t> test_mask_;
};

enum class Block { kB, kC, kXFake };
enum class FlipDirection { kAdd, kDrop };

std::string to_string(Block block);
std::string to_string(FlipDirection direction);

// A coordinate inside one of the attacker-controlled blocks.
//   kB:     row = fake index u in [0, m), col = real node v in [0, n)
//   kC:     row, col = fake indices, row != col
//   kXFake: row = fake index, col = feature dimension
struct BlockCoord {
  Block block = Block::kB;
  int row = 0;
  int col = 0;
  bool operator==(const BlockCoord&) const = default;
};

// Maps an entry of the assembled adjacency to its fake-block coordinate.
// Throws ImmutabilityViolation when both endpoints are original nodes.
BlockCoord edge_coord_from_global(int num_real, int i, int j);
// Same for a row of the assembled feature matrix.
BlockCoord feature_coord_from_global(int num_real, int node, int dim);

// The original graph plus the m injected nodes. The base graph is shared
// read-only; only the fake blocks B (m x n), C (m x m) and X_fake (m x d)
// mutate, and only through flip().
class AugmentedGraph {
 public:
  AugmentedGraph() = default;
  AugmentedGraph(std::shared_ptr<const Graph> base, int num_fake);

  const Graph& base() const { return *base_; }
  const std::shared_ptr<const Graph>& base_ptr() const { return base_; }
  int num_real() const { return base_->num_nodes(); }
  int num_fake() const { return num_fake_; }
  int num_total() const { return num_real() + num_fake_; }

  const BitMatrix& fake_real_edges() const { return b_; }
  const BitMatrix& fake_fake_edges() const { return c_; }
  const BitMatrix& fake_features() const { return x_fake_; }

  std::uint8_t entry(const BlockCoord& coord) const;

  // Toggles one entry (and its mirror for C). Throws StructuralError for an
  // out-of-range coordinate and ConstraintViolation for an add on a 1, a drop
  // on a 0, or a diagonal C entry.
  void flip(const BlockCoord& coord, FlipDirection direction);

  // Labels for fake nodes that carry one; used only when retraining.
  const std::map<int, int>& fake_labels() const { return fake_labels_; }
  void set_fake_label(int fake, int label);
  void clear_fake_labels() { fake_labels_.clear(); }

  // Budget units: one per undirected edge and one per feature entry.
  long edge_units() const;
  long feature_units() const;
  long total_units() const { return edge_units() + feature_units(); }

  std::uint64_t digest() const;
  bool operator==(const AugmentedGraph& other) const;

 private:
  void check_coord(const BlockCoord& coord) const;

  std::shared_ptr<const Graph> base_;
  int num_fake_ = 0;
  BitMatrix b_;
  BitMatrix c_;
  BitMatrix x_fake_;
  std::map<int, int> fake_labels_;
};

// Value-semantics wrapper around AugmentedGraph::flip.
AugmentedGraph flip(AugmentedGraph aug, const BlockCoord& coord,
                    FlipDirection direction);

struct AssembledGraph {
  SparseMatrix adjacency;  // A' = [[A, B^T], [B, C]]
  SparseMatrix features;   // X' = [X; X_fake]
};

AssembledGraph assemble(const AugmentedGraph& aug);

// The normalized adjacency together with the quantities its derivative needs.
struct NormalizedAdjacency {
  NormalizationMode mode = NormalizationMode::kRowWise;
  SparseMatrix matrix;     // A-hat
  SparseMatrix transpose;  // A-hat^T (differs from matrix for kRowWise)
  Eigen::VectorXd degree;  // row sums of A' + I
};

// A-tilde = A' + I, D_ii = sum_j A-tilde_ij;
// kRowWise: D^-1 A-tilde, kSymmetric: D^-1/2 A-tilde D^-1/2.
// Throws StructuralError unless `adjacency` is square, binary, symmetric and
// has a zero diagonal.
NormalizedAdjacency normalize(const SparseMatrix& adjacency,
                              NormalizationMode mode);

// Labels used by the classifier loss: real train-mask nodes, plus labeled
// fake nodes (indexed n + u) when include_fake is set.
std::vector<std::pair<int, int>> labeled_nodes(const AugmentedGraph& aug,
                                               bool include_fake);

}  // namespace gcnattack

#endif  // GCNATTACK_GRAPH_HPP_
