//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_NEURAL_H_
#define GPNN_NEURAL_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gpnn/coloring.h"
#include "gpnn/graph.h"
#include "gpnn/interner.h"

namespace gpnn {

struct NeuralConfig {
  int f = 8;       // hidden width
  int layers = 2;  // L
  int k = 16;      // partition slots
  int d = 1;       // hop radius
  std::uint64_t seed = 0;
  // Concatenate a GIN-style base embedding h_v^gnn in front of γ_v.
  bool gnn_plugin = false;
};

// Two affine maps with a rectifier in between; row-vector convention.
struct Mlp {
  Eigen::MatrixXd w1, w2;
  Eigen::RowVectorXd b1, b2;

  Eigen::RowVectorXd operator()(const Eigen::RowVectorXd &x) const;
};

struct Parameters {
  NeuralConfig config;
  std::vector<double> epsilon;  // per layer, vertex update
  std::vector<double> mu;       // per layer, interaction update
  std::vector<Mlp> theta;       // per layer, vertex MLP
  std::vector<Mlp> psi;         // per layer, interaction MLP
  std::vector<double> omega;    // per slot
  std::vector<Eigen::MatrixXd> slot_weights;  // per slot, (2f + k) x f
  std::vector<double> gin_epsilon;            // plugin only
  std::vector<Mlp> gin;                       // plugin only

  // Deterministic unit vector for an interning key (a canonical color value).
  Eigen::RowVectorXd color_embedding(std::span<const std::int64_t> key) const;
};

// Throws std::invalid_argument unless f, layers, k, d >= 1.
Parameters init_params(const NeuralConfig &config);

struct NeuralOutput {
  Eigen::MatrixXd vertex;  // one row per vertex
  Eigen::RowVectorXd graph;  // sum of rows, then the component count
};

// Forward pass of the MLP form of the GPNN layer. Slots are assigned to the
// graph's nonempty partitions by ascending canonical index; throws
// std::invalid_argument when there are more than k of them.
NeuralOutput forward(const Graph &g, const PartitionColoring &coloring, Variant variant,
                     const Parameters &params);

// max |a - b| / max(1, max |a|, max |b|).
double relative_deviation(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b);

}  // namespace gpnn

#endif  // GPNN_NEURAL_H_
