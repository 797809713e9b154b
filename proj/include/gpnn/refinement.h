//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_REFINEMENT_H_
#define GPNN_REFINEMENT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gpnn/coloring.h"
#include "gpnn/graph.h"
#include "gpnn/interner.h"
#include "gpnn/partition.h"
#include "gpnn/verdict.h"

namespace gpnn {

struct GpnnConfig {
  Scheme scheme = Scheme::kTrivial;
  Variant variant = Variant::kStar;
  int d = 1;
  // 0 selects a cap large enough for the joint state to stabilize.
  int max_layers = 0;
  // Aggregate the interaction update over N_d(v) ∪ N_d(u) instead of N_d(v).
  bool symmetric_interactions = false;
};

// Iteration state of the combinatorial GPNN layer on one graph.
//
// beta and gamma are per-vertex colors. alpha holds colors of the tracked
// ordered pairs only, stored row-wise: the pairs (v, u) of row v are
// tracked_u[tracked_offsets[v] .. tracked_offsets[v + 1]), ascending in u.
// Untracked pairs keep their static λ_E color; (v, v) uses the SelfPair color.
struct RefinementState {
  std::vector<Color> beta;
  std::vector<Color> gamma;
  std::vector<std::int64_t> tracked_offsets;
  std::vector<Vertex> tracked_u;
  std::vector<Color> alpha;
  int layer = 0;

  // N_d(v) with v itself, ascending.
  std::vector<std::vector<Vertex>> hood;
  // Static pair colors indexed by dense partition class.
  std::vector<std::int32_t> cls;
  std::int32_t num_classes = 0;
  std::vector<Color> static_color;  // [(cls_v * K + cls_u) * 3 + tag]
  std::vector<Color> self_color;    // [cls_v]

  // Current interaction color a(v, u) as consumed by the update rules.
  Color interaction(const Graph &g, const PartitionColoring &c, Vertex v, Vertex u) const;
  // Index of (v, u) in `alpha`, or -1 when untracked.
  std::int64_t tracked_index(Vertex v, Vertex u) const;
};

RefinementState init_state(const Graph &g, const PartitionColoring &coloring,
                           const GpnnConfig &config, Interner &table);

// One layer: β from γ, then α on tracked pairs, then γ from β and α.
void gpnn_step(RefinementState &state, const Graph &g, const PartitionColoring &coloring,
               const GpnnConfig &config, Interner &table);

// Lockstep layer over several graphs sharing one table; identifiers are
// assigned per sub-step over the union of all graphs.
struct StepResult {
  std::int64_t gamma_classes = 0;
  std::int64_t alpha_classes = 0;
};
StepResult gpnn_step_joint(std::span<RefinementState *const> states,
                           std::span<const Graph *const> graphs,
                           std::span<const PartitionColoring *const> colorings,
                           const GpnnConfig &config, Interner &table);

// λ-GPNN^δ distinguishability test. Distinguished at the first layer whose
// γ histograms differ; Equivalent once the joint γ and α partitions stop
// refining.
Verdict gpnn_compare(const Graph &g, const Graph &h, const GpnnConfig &config);

struct InteractionCost {
  std::int64_t tracked_pairs = 0;
  std::int64_t q = 0;  // max |N_d(v)| including v
};

InteractionCost interaction_cost(const Graph &g, const PartitionLabeling &labeling,
                                 Variant variant, int d);

}  // namespace gpnn

#endif  // GPNN_REFINEMENT_H_
