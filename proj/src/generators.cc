//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/generators.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace gpnn {

namespace {

constexpr std::array<std::string_view, 8> kKindNames = {
    "cycle", "disjoint_cycles", "complete", "path",
    "gnp",   "random_regular",  "shrikhande", "rook4x4",
};
constexpr std::array<std::size_t, 8> kParamCount = {1, 2, 1, 1, 2, 2, 0, 0};

Vertex as_count(double x, const char *what) {
  if (!(x >= 0) || x != std::floor(x) || x > 1e9)
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return static_cast<Vertex>(x);
}

}  // namespace

std::string_view graph_kind_name(GraphKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name)
      return static_cast<GraphKind>(i);
  return std::nullopt;
}

EdgeList generate_edge_list(GraphKind kind, std::span<const double> params,
                            std::uint64_t seed) {
  const auto expected = kParamCount[static_cast<std::size_t>(kind)];
  if (params.size() != expected)
    throw std::invalid_argument(std::string(graph_kind_name(kind)) + " expects " +
                                std::to_string(expected) + " parameter(s)");
  EdgeList out;
  auto cycle_edges = [&](Vertex n, Vertex base) {
    if (n < 3)
      throw std::invalid_argument("cycle needs n >= 3");
    for (Vertex i = 0; i < n; ++i)
      out.edges.emplace_back(base + i, base + (i + 1) % n);
  };
  auto from_graph = [&](const Graph &g) {
    out.n = g.num_vertices();
    out.edges = g.edges();
  };
  switch (kind) {
  case GraphKind::kCycle:
    out.n = as_count(params[0], "n");
    cycle_edges(out.n, 0);
    break;
  case GraphKind::kDisjointCycles: {
    const Vertex n = as_count(params[0], "n");
    const Vertex k = as_count(params[1], "k");
    out.n = n * k;
    for (Vertex i = 0; i < k; ++i)
      cycle_edges(n, i * n);
    break;
  }
  case GraphKind::kComplete:
    from_graph(complete_graph(as_count(params[0], "n")));
    break;
  case GraphKind::kPath:
    from_graph(path_graph(as_count(params[0], "n")));
    break;
  case GraphKind::kGnp:
    from_graph(gnp(as_count(params[0], "n"), params[1], seed));
    break;
  case GraphKind::kRandomRegular:
    from_graph(random_regular(as_count(params[0], "n"), as_count(params[1], "d"), seed));
    break;
  case GraphKind::kShrikhande:
    from_graph(shrikhande_graph());
    break;
  case GraphKind::kRook4x4:
    from_graph(rook_graph_4x4());
    break;
  }
  return out;
}

Graph generate(GraphKind kind, std::span<const double> params, std::uint64_t seed) {
  const EdgeList e = generate_edge_list(kind, params, seed);
  return Graph::from_edge_list(e.n, e.edges);
}

Graph gnp(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (p >= 1.0)
      return complete_graph(n);
    // Batagelj-Brandes skipping over the lower triangle (v > w).
    const double log_q = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    while (v < n) {
      const double r = unit(rng);
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n)
        edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_regular(Vertex n, Vertex d, std::uint64_t seed) {
  if (d >= n && n > 0)
    throw std::invalid_argument("random_regular needs d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular needs n * d even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex i = 0; i < d; ++i)
      stubs.push_back(v);

  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Edge> seen;
    bool ok = true;
    for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
      auto [a, b] = std::minmax(stubs[i], stubs[i + 1]);
      ok = a != b && seen.emplace(a, b).second;
    }
    if (ok) {
      const std::vector<Edge> edges(seen.begin(), seen.end());
      return Graph::from_edge_list(n, edges);
    }
  }
  throw std::invalid_argument("random_regular: no simple pairing found");
}

Graph shrikhande_graph() {
  // Cayley graph of Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
  std::vector<Edge> edges;
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (const auto &s : steps) {
        const int nx = (x + s[0]) % 4, ny = (y + s[1]) % 4;
        edges.emplace_back(x * 4 + y, nx * 4 + ny);
      }
  return Graph::from_edge_list(16, edges);
}

Graph rook_graph_4x4() {
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      if (a / 4 == b / 4 || a % 4 == b % 4)
        edges.emplace_back(a, b);
  return Graph::from_edge_list(16, edges);
}

Permutation random_permutation(Vertex n, std::uint64_t seed) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(std::move(m));
}

Graph graph_from_canonical(const CanonicalForm &form) {
  Vertex n = 0;
  for (int i = 0; i < 4; ++i)
    n |= static_cast<Vertex>(form.bytes.at(i)) << (8 * i);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if (form.bytes.at(4 + bit / 8) & (0x80u >> (bit % 8)))
        edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

std::vector<Graph> enumerate_all(Vertex n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumerate_all supports 1 <= n <= 7");
  // Deleting any vertex of an n-vertex graph leaves an (n-1)-vertex graph,
  // so extending every smaller class by one vertex in all ways reaches
  // every class.
  std::set<CanonicalForm> forms = {canonical_form(Graph::from_edge_list(1, {}))};
  for (Vertex size = 2; size <= n; ++size) {
    std::set<CanonicalForm> next;
    for (const auto &f : forms) {
      const Graph base = graph_from_canonical(f);
      const auto base_edges = base.edges();
      const Vertex fresh = size - 1;
      for (std::uint32_t mask = 0; mask < (1u << fresh); ++mask) {
        auto edges = base_edges;
        for (Vertex v = 0; v < fresh; ++v)
          if (mask & (1u << v))
            edges.emplace_back(v, fresh);
        next.insert(canonical_form(Graph::from_edge_list(size, edges)));
      }
    }
    forms = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto &f : forms)
    out.push_back(graph_from_canonical(f));
  return out;
}

}  // namespace gpnn
