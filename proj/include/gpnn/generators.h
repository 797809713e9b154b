//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_GENERATORS_H_
#define GPNN_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gpnn/graph.h"
#include "gpnn/isomorphism.h"

namespace gpnn {

enum class GraphKind {
  kCycle,           // (n)
  kDisjointCycles,  // (n, k): k disjoint copies of C_n
  kComplete,        // (n)
  kPath,            // (n)
  kGnp,             // (n, p)
  kRandomRegular,   // (n, d)
  kShrikhande,      // ()
  kRook4x4,         // ()
};

std::string_view graph_kind_name(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

struct EdgeList {
  Vertex n = 0;
  std::vector<Edge> edges;  // in construction order
};

// Deterministic in (kind, params, seed). Throws std::invalid_argument on a
// wrong parameter count or infeasible parameters.
EdgeList generate_edge_list(GraphKind kind, std::span<const double> params,
                            std::uint64_t seed);
Graph generate(GraphKind kind, std::span<const double> params, std::uint64_t seed);

// G(n, p) by geometric edge skipping, O(n + m).
Graph gnp(Vertex n, double p, std::uint64_t seed);
// Uniform pairing model with rejection of loops and multi-edges.
Graph random_regular(Vertex n, Vertex d, std::uint64_t seed);
Graph shrikhande_graph();
Graph rook_graph_4x4();

Permutation random_permutation(Vertex n, std::uint64_t seed);

// One graph per isomorphism class on n vertices (1 <= n <= 7), each given by
// its canonical relabeling and sorted by canonical form.
std::vector<Graph> enumerate_all(Vertex n);

// The graph whose canonical form is `form` (vertices in canonical order).
Graph graph_from_canonical(const CanonicalForm &form);

}  // namespace gpnn

#endif  // GPNN_GENERATORS_H_
