//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gpnn {

Graph Graph::from_edge_list(Vertex n, std::span<const Edge> edges) {
  if (n < 0)
    throw std::invalid_argument("negative vertex count");

  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    sorted.emplace_back(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : sorted) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.nbrs_.resize(sorted.size() * 2);
  std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list receives its smaller
  // neighbors first, then its larger ones, both ascending.
  for (auto [u, v] : sorted) {
    g.nbrs_[fill[u]++] = v;
    g.nbrs_[fill[v]++] = u;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v))
    std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(nbrs_.size() / 2);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

Permutation::Permutation(std::vector<Vertex> mapping) : map_(std::move(mapping)) {
  std::vector<char> seen(map_.size(), 0);
  for (Vertex x : map_) {
    if (x < 0 || static_cast<std::size_t>(x) >= map_.size() || seen[x])
      throw std::invalid_argument("permutation is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(Vertex n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(map_.size());
  for (Vertex v = 0; v < size(); ++v)
    inv[map_[v]] = v;
  return Permutation(std::move(inv));
}

namespace {

void check_vertex(const Graph &g, Vertex v) {
  if (v < 0 || v >= g.num_vertices())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<Vertex> neighborhood_d(const Graph &g, Vertex v, int d,
                                   bool include_self) {
  check_vertex(g, v);
  if (d < 1)
    throw std::invalid_argument("hop radius must be >= 1");

  std::vector<Vertex> out;
  if (d == 1) {
    auto nb = g.neighbors(v);
    out.assign(nb.begin(), nb.end());
  } else {
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<Vertex> frontier = {v};
    dist[v] = 0;
    for (int hop = 1; hop <= d && !frontier.empty(); ++hop) {
      std::vector<Vertex> next;
      for (Vertex x : frontier)
        for (Vertex y : g.neighbors(x))
          if (dist[y] < 0) {
            dist[y] = hop;
            next.push_back(y);
          }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }
  if (include_self)
    out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> subset) {
  InducedSubgraph out;
  out.original.assign(subset.begin(), subset.end());
  for (Vertex v : out.original)
    check_vertex(g, v);
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()),
                     out.original.end());

  std::vector<Vertex> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    local[out.original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex v : out.original)
    for (Vertex u : g.neighbors(v))
      if (v < u && local[u] >= 0)
        edges.emplace_back(local[v], local[u]);
  out.graph = Graph::from_edge_list(static_cast<Vertex>(out.original.size()), edges);
  return out;
}

Graph apply_permutation(const Graph &g, const Permutation &pi) {
  if (pi.size() != g.num_vertices())
    throw std::invalid_argument("permutation size does not match graph");
  std::vector<Edge> edges = g.edges();
  for (auto &[u, v] : edges) {
    u = pi(u);
    v = pi(v);
  }
  return Graph::from_edge_list(g.num_vertices(), edges);
}

Components connected_components(const Graph &g) {
  Components c;
  c.label.assign(g.num_vertices(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (c.label[s] >= 0)
      continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (c.label[y] < 0) {
          c.label[y] = c.count;
          stack.push_back(y);
        }
    }
    ++c.count;
  }
  return c;
}

std::int64_t triangle_count(const Graph &g, Vertex v) {
  check_vertex(g, v);
  auto nb = g.neighbors(v);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    auto nu = g.neighbors(nb[i]);
    // |N(v) ∩ N(u)| restricted to w > u counts each pair once.
    auto it_a = nb.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    auto it_b = std::upper_bound(nu.begin(), nu.end(), nb[i]);
    while (it_a != nb.end() && it_b != nu.end()) {
      if (*it_a < *it_b)
        ++it_a;
      else if (*it_b < *it_a)
        ++it_b;
      else {
        ++count;
        ++it_a;
        ++it_b;
      }
    }
  }
  return count;
}

std::vector<std::int64_t> triangle_counts(const Graph &g) {
  std::vector<std::int64_t> out(g.num_vertices(), 0);
  std::vector<char> mark(g.num_vertices(), 0);
  // Every triangle u < v < w is found once from its lowest vertex.
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex x : nu)
      mark[x] = 1;
    for (Vertex v : nu) {
      if (v <= u)
        continue;
      for (Vertex w : g.neighbors(v))
        if (w > v && mark[w]) {
          ++out[u];
          ++out[v];
          ++out[w];
        }
    }
    for (Vertex x : nu)
      mark[x] = 0;
  }
  return out;
}

Graph cycle_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i)
    e.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, e);
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges())
    e.emplace_back(u + a.num_vertices(), v + a.num_vertices());
  return Graph::from_edge_list(a.num_vertices() + b.num_vertices(), e);
}

}  // namespace gpnn
