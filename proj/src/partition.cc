//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/partition.h"

#include <algorithm>
#include <array>
#include <map>

namespace gpnn {

namespace {

constexpr std::array<Scheme, 6> kAllSchemes = {
    Scheme::kTrivial,    Scheme::kDegree,    Scheme::kCore,
    Scheme::kCoreDegree, Scheme::kCoreOnion, Scheme::kTriangle,
};

constexpr std::array<std::string_view, 6> kSchemeNames = {
    "trivial", "degree", "core", "core-degree", "core-onion", "triangle",
};

}  // namespace

std::string_view scheme_name(Scheme s) {
  return kSchemeNames[static_cast<std::size_t>(s)];
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (std::size_t i = 0; i < kSchemeNames.size(); ++i)
    if (kSchemeNames[i] == name)
      return kAllSchemes[i];
  return std::nullopt;
}

std::span<const Scheme> practical_schemes() {
  return std::span<const Scheme>(kAllSchemes).subspan(1);
}

std::span<const Scheme> all_schemes() { return kAllSchemes; }

std::vector<PartitionIndex> PartitionLabeling::multiset() const {
  std::vector<PartitionIndex> out = labels;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionIndex> PartitionLabeling::distinct() const {
  std::vector<PartitionIndex> out = multiset();
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> core_decomposition(const Graph &g) {
  // Batagelj-Zaversnik: vertices kept sorted by current degree in `vert`,
  // bucket starts in `bin`; peeling order is the array order.
  const Vertex n = g.num_vertices();
  std::vector<Vertex> deg(n);
  Vertex max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<Vertex> bin(static_cast<std::size_t>(max_deg) + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    ++bin[deg[v]];
  Vertex start = 0;
  for (Vertex d = 0; d <= max_deg; ++d) {
    Vertex count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<Vertex> pos(n), vert(n);
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (Vertex d = max_deg; d > 0; --d)
    bin[d] = bin[d - 1];
  if (!bin.empty())
    bin[0] = 0;

  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = vert[i];
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] <= deg[v])
        continue;
      const Vertex du = deg[u];
      const Vertex pu = pos[u];
      const Vertex pw = bin[du];
      const Vertex w = vert[pw];
      if (u != w) {
        std::swap(vert[pu], vert[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return deg;
}

std::vector<OnionLabel> onion_decomposition(const Graph &g) {
  const Vertex n = g.num_vertices();
  std::vector<OnionLabel> out(n);
  if (n == 0)
    return out;

  std::vector<Vertex> deg(n);
  Vertex max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // Lazy buckets: a vertex is pushed each time its degree changes; stale
  // entries are skipped when scanned. Total pushes are O(n + m).
  std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(max_deg) + 1);
  for (Vertex v = 0; v < n; ++v)
    bucket[deg[v]].push_back(v);

  std::vector<char> removed(n, 0), queued(n, 0);
  Vertex remaining = n;
  Vertex shell = 0;
  Vertex layer = 0;
  Vertex scan = 0;  // every remaining vertex has degree >= scan when the frontier is empty
  std::vector<Vertex> frontier, next;

  while (remaining > 0) {
    if (frontier.empty()) {
      // Raise the shell to the minimum remaining degree.
      for (;; ++scan) {
        auto &b = bucket[scan];
        for (Vertex v : b)
          if (!removed[v] && !queued[v] && deg[v] == scan) {
            queued[v] = 1;
            frontier.push_back(v);
          }
        b.clear();
        if (!frontier.empty())
          break;
      }
      shell = std::max(shell, scan);
      layer = 0;
    }
    ++layer;
    for (Vertex v : frontier) {
      removed[v] = 1;
      out[v] = {shell, layer};
    }
    remaining -= static_cast<Vertex>(frontier.size());
    next.clear();
    for (Vertex v : frontier)
      for (Vertex u : g.neighbors(v)) {
        if (removed[u])
          continue;
        --deg[u];
        if (queued[u])
          continue;
        if (deg[u] <= shell) {
          queued[u] = 1;
          next.push_back(u);
        } else {
          bucket[deg[u]].push_back(u);
        }
      }
    std::sort(next.begin(), next.end());
    frontier.swap(next);
  }
  return out;
}

std::vector<CoreDegreeLabel> core_degree_labels(const Graph &g) {
  const std::vector<Vertex> core = core_decomposition(g);
  std::vector<CoreDegreeLabel> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Vertex inside = 0;
    for (Vertex u : g.neighbors(v))
      inside += core[u] == core[v];
    out[v] = {core[v], inside == core[v]};
  }
  return out;
}

PartitionLabeling partition(const Graph &g, Scheme scheme) {
  PartitionLabeling out;
  out.scheme = scheme;
  out.labels.resize(g.num_vertices());
  auto &labels = out.labels;
  switch (scheme) {
  case Scheme::kTrivial:
    break;
  case Scheme::kDegree:
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      labels[v] = {g.degree(v), 0};
    break;
  case Scheme::kCore: {
    const auto core = core_decomposition(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      labels[v] = {core[v], 0};
    break;
  }
  case Scheme::kCoreDegree: {
    const auto cd = core_degree_labels(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      labels[v] = {cd[v].shell, cd[v].flag ? 1 : 0};
    break;
  }
  case Scheme::kCoreOnion: {
    const auto onion = onion_decomposition(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      labels[v] = {onion[v].core, onion[v].layer};
    break;
  }
  case Scheme::kTriangle: {
    const auto tri = triangle_counts(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      labels[v] = {tri[v], 0};
    break;
  }
  }
  return out;
}

PartitionStats partition_stats(const Graph &g, const PartitionLabeling &labeling) {
  PartitionStats s;
  std::map<PartitionIndex, std::int64_t> sizes;
  for (const auto &l : labeling.labels)
    ++sizes[l];
  s.num_partitions = static_cast<std::int64_t>(sizes.size());
  for (auto [u, v] : g.edges()) {
    if (labeling.labels[u] == labeling.labels[v])
      ++s.same_partition_edges;
    else
      ++s.cross_partition_edges;
  }
  const double n = g.num_vertices();
  for (const auto &[label, count] : sizes)
    s.vertex_distribution.emplace_back(label, 100.0 * static_cast<double>(count) / n);
  return s;
}

}  // namespace gpnn
