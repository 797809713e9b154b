//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_PARTITION_H_
#define GPNN_PARTITION_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gpnn/graph.h"

namespace gpnn {

enum class Scheme {
  kTrivial,
  kDegree,
  kCore,
  kCoreDegree,
  kCoreOnion,
  kTriangle,
};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

// The five non-trivial schemes, in declaration order.
std::span<const Scheme> practical_schemes();
// Trivial followed by the five practical schemes.
std::span<const Scheme> all_schemes();

// Canonical partition index. It is the partition-defining property value
// itself, so equal indices mean the same partition across different graphs:
//   Trivial    (0, 0)
//   Degree     (degree, 0)
//   Core       (coreness, 0)
//   CoreDegree (coreness, 1 if the within-shell degree equals the coreness)
//   CoreOnion  (coreness, onion layer within the shell)
//   Triangle   (triangle count, 0)
struct PartitionIndex {
  std::int64_t major = 0;
  std::int64_t minor = 0;

  friend auto operator<=>(const PartitionIndex &, const PartitionIndex &) = default;
};

struct PartitionLabeling {
  Scheme scheme = Scheme::kTrivial;
  std::vector<PartitionIndex> labels;  // per vertex

  // Sorted label multiset.
  std::vector<PartitionIndex> multiset() const;
  // Distinct labels in ascending order (the nonempty partitions).
  std::vector<PartitionIndex> distinct() const;
};

PartitionLabeling partition(const Graph &g, Scheme scheme);

// Coreness of every vertex via bucket peeling in O(n + m).
std::vector<Vertex> core_decomposition(const Graph &g);

struct OnionLabel {
  Vertex core = 0;
  Vertex layer = 0;  // 1-based within the shell

  friend bool operator==(const OnionLabel &, const OnionLabel &) = default;
};

// Onion decomposition in O(n + m). Each round removes, simultaneously, every
// remaining vertex whose current degree is at most the current shell value;
// the shell value rises to the minimum remaining degree when a round would
// be empty, and the layer counter restarts at 1.
std::vector<OnionLabel> onion_decomposition(const Graph &g);

struct CoreDegreeLabel {
  Vertex shell = 0;
  bool flag = false;  // degree inside the shell subgraph equals `shell`

  friend bool operator==(const CoreDegreeLabel &, const CoreDegreeLabel &) = default;
};

std::vector<CoreDegreeLabel> core_degree_labels(const Graph &g);

struct PartitionStats {
  std::int64_t num_partitions = 0;
  // Edges inside one partition (c_e) and edges across partitions (c_a).
  std::int64_t same_partition_edges = 0;
  std::int64_t cross_partition_edges = 0;
  // Percentage of vertices per nonempty partition, ascending by index.
  std::vector<std::pair<PartitionIndex, double>> vertex_distribution;
};

PartitionStats partition_stats(const Graph &g, const PartitionLabeling &labeling);

}  // namespace gpnn

#endif  // GPNN_PARTITION_H_
