//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_GRAPH_H_
#define GPNN_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gpnn {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1, stored as CSR with sorted
// neighbor lists. Immutable after construction.
class Graph {
public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Duplicate edges (in either orientation) are collapsed.
  static Graph from_edge_list(Vertex n, std::span<const Edge> edges);
  static Graph from_edge_list(Vertex n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  Vertex num_vertices() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(nbrs_.size()) / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  // Each unordered edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.nbrs_ == b.nbrs_;
  }

private:
  Vertex n_ = 0;
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<Vertex> nbrs_;
};

// A bijection on 0..n-1; maps old identifier v to new identifier at(v).
class Permutation {
public:
  Permutation() = default;
  // Throws std::invalid_argument unless `mapping` is a bijection.
  explicit Permutation(std::vector<Vertex> mapping);

  static Permutation identity(Vertex n);

  Vertex size() const { return static_cast<Vertex>(map_.size()); }
  Vertex operator()(Vertex v) const { return map_[v]; }
  std::span<const Vertex> mapping() const { return map_; }
  Permutation inverse() const;

private:
  std::vector<Vertex> map_;
};

// Vertices at shortest-path distance 1..d from v, plus v itself when
// include_self is set. Sorted ascending. Bounded BFS.
std::vector<Vertex> neighborhood_d(const Graph &g, Vertex v, int d,
                                   bool include_self);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> original id, increasing
};

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> subset);

Graph apply_permutation(const Graph &g, const Permutation &pi);

struct Components {
  Vertex count = 0;
  std::vector<Vertex> label;
};

Components connected_components(const Graph &g);

std::int64_t triangle_count(const Graph &g, Vertex v);
// Triangle count of every vertex at once.
std::vector<std::int64_t> triangle_counts(const Graph &g);

// Common fixtures.
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph star_graph(Vertex leaves);  // center 0
Graph disjoint_union(const Graph &a, const Graph &b);

}  // namespace gpnn

#endif  // GPNN_GRAPH_H_
