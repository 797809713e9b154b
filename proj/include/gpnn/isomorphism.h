//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_ISOMORPHISM_H_
#define GPNN_ISOMORPHISM_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpnn/graph.h"
#include "gpnn/partition.h"

namespace gpnn {

struct IsoResult {
  bool isomorphic = false;
  // Maps V(G) to V(H); present iff isomorphic.
  std::optional<Permutation> witness;
};

// Exact test by individualization and joint 1-WL refinement of both graphs.
// Practical up to a few dozen vertices.
IsoResult are_isomorphic(const Graph &g, const Graph &h);

// Byte encoding of the isomorphism class: vertex count (4 bytes, little
// endian) followed by the upper triangle of the adjacency matrix, row-major
// and bit-packed, minimized over the leaves of the refinement search tree.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

CanonicalForm canonical_form(const Graph &g);

// Border vertices with every edge of G between them.
Graph boundary_subgraph(const Graph &g, const PartitionLabeling &labeling);

// Index-aligned: the subgraphs induced by each canonical partition index are
// pairwise isomorphic; an index absent from one graph only matches an empty
// partition.
bool partition_isomorphic(const Graph &g, const Graph &h, Scheme scheme);

// Partition-isomorphic and the boundary subgraphs are isomorphic.
bool interaction_isomorphic(const Graph &g, const Graph &h, Scheme scheme);

}  // namespace gpnn

#endif  // GPNN_ISOMORPHISM_H_
