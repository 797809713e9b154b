//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/isomorphism.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "gpnn/interner.h"
#include "gpnn/verdict.h"

namespace gpnn {

namespace {

Signature refine_signature(const Graph &g, const std::vector<Color> &c, Vertex v) {
  Signature sig;
  sig.reserve(static_cast<std::size_t>(g.degree(v)) + 1);
  sig.push_back(c[v]);
  for (Vertex u : g.neighbors(v))
    sig.push_back(c[u]);
  std::sort(sig.begin() + 1, sig.end());
  return sig;
}

std::int64_t num_classes(const std::vector<Color> &a, const std::vector<Color> &b) {
  std::vector<Color> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return std::unique(all.begin(), all.end()) - all.begin();
}

// Refines both colorings to the joint stable partition. Returns false as
// soon as the color histograms differ.
bool joint_refine(const Graph &g, const Graph &h, std::vector<Color> &cg,
                  std::vector<Color> &ch, Interner &table) {
  std::int64_t classes = num_classes(cg, ch);
  for (;;) {
    if (make_histogram(cg) != make_histogram(ch))
      return false;
    std::vector<Signature> sigs;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      sigs.push_back(refine_signature(g, cg, v));
    for (Vertex v = 0; v < h.num_vertices(); ++v)
      sigs.push_back(refine_signature(h, ch, v));
    const auto ids = table.fresh_batch(sigs);
    const auto ng = static_cast<std::ptrdiff_t>(cg.size());
    std::copy(ids.begin(), ids.begin() + ng, cg.begin());
    std::copy(ids.begin() + ng, ids.end(), ch.begin());
    if (table.last_batch_classes() == classes)
      return make_histogram(cg) == make_histogram(ch);
    classes = table.last_batch_classes();
  }
}

// Smallest non-singleton class, ties broken by color; nullopt when discrete.
std::optional<Color> target_cell(const std::vector<Color> &c) {
  std::optional<Color> best;
  std::int64_t best_size = 0;
  for (auto [color, size] : make_histogram(c))
    if (size > 1 && (!best || size < best_size)) {
      best = color;
      best_size = size;
    }
  return best;
}

bool iso_search(const Graph &g, const Graph &h, std::vector<Color> cg, std::vector<Color> ch,
                Interner &table, std::vector<Vertex> &witness) {
  if (!joint_refine(g, h, cg, ch, table))
    return false;
  const auto cell = target_cell(cg);
  if (!cell) {
    std::map<Color, Vertex> in_h;
    for (Vertex w = 0; w < h.num_vertices(); ++w)
      in_h[ch[w]] = w;
    witness.assign(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      witness[v] = in_h.at(cg[v]);
    for (auto [u, v] : g.edges())
      if (!h.has_edge(witness[u], witness[v]))
        return false;
    return true;
  }
  const Vertex v = static_cast<Vertex>(std::find(cg.begin(), cg.end(), *cell) - cg.begin());
  const Signature mark = {0};
  for (Vertex w = 0; w < h.num_vertices(); ++w) {
    if (ch[w] != *cell)
      continue;
    const Color fresh = table.fresh_batch(std::span<const Signature>(&mark, 1))[0];
    auto ng = cg;
    auto nh = ch;
    ng[v] = fresh;
    nh[w] = fresh;
    if (iso_search(g, h, std::move(ng), std::move(nh), table, witness))
      return true;
  }
  return false;
}

// Order-preserving renumbering to 0..k-1.
std::vector<Color> to_ranks(const std::vector<Signature> &sigs) {
  std::vector<std::size_t> order(sigs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });
  std::vector<Color> rank(sigs.size());
  Color r = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || sigs[order[i]] != sigs[order[i - 1]])
      ++r;
    rank[order[i]] = r;
  }
  return rank;
}

Color max_rank(const std::vector<Color> &c) {
  return c.empty() ? -1 : *std::max_element(c.begin(), c.end());
}

std::vector<Color> canonical_refine(const Graph &g, std::vector<Color> c) {
  for (;;) {
    std::vector<Signature> sigs;
    sigs.reserve(c.size());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      sigs.push_back(refine_signature(g, c, v));
    auto next = to_ranks(sigs);
    const bool stable = max_rank(next) == max_rank(c);
    c = std::move(next);
    if (stable)
      return c;
  }
}

std::vector<std::uint8_t> adjacency_bits(const Graph &g, const std::vector<Color> &rank) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v)
    order[rank[v]] = v;
  std::vector<std::uint8_t> bytes(4 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
  for (int i = 0; i < 4; ++i)
    bytes[i] = static_cast<std::uint8_t>((static_cast<std::uint32_t>(n) >> (8 * i)) & 0xff);
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(order[i], order[j]))
        bytes[4 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
  return bytes;
}

void canonical_search(const Graph &g, std::vector<Color> c,
                      std::optional<std::vector<std::uint8_t>> &best) {
  c = canonical_refine(g, std::move(c));
  const auto cell = target_cell(c);
  if (!cell) {
    auto bits = adjacency_bits(g, c);
    if (!best || bits < *best)
      best = std::move(bits);
    return;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c[v] != *cell)
      continue;
    // Individualized vertex sorts just before the rest of its cell.
    std::vector<Signature> sigs(c.size());
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      sigs[u] = {c[u], u == v ? 0 : 1};
    canonical_search(g, to_ranks(sigs), best);
  }
}

}  // namespace

IsoResult are_isomorphic(const Graph &g, const Graph &h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
    return {};
  Interner table;
  const Color uniform = table.intern({0});
  std::vector<Vertex> witness;
  if (!iso_search(g, h, std::vector<Color>(g.num_vertices(), uniform),
                  std::vector<Color>(h.num_vertices(), uniform), table, witness))
    return {};
  return {true, Permutation(std::move(witness))};
}

CanonicalForm canonical_form(const Graph &g) {
  std::optional<std::vector<std::uint8_t>> best;
  canonical_search(g, std::vector<Color>(g.num_vertices(), 0), best);
  return {std::move(*best)};
}

Graph boundary_subgraph(const Graph &g, const PartitionLabeling &labeling) {
  std::vector<Vertex> border;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Vertex u : g.neighbors(v))
      if (labeling.labels[u] != labeling.labels[v]) {
        border.push_back(v);
        break;
      }
  return induced_subgraph(g, border).graph;
}

bool partition_isomorphic(const Graph &g, const Graph &h, Scheme scheme) {
  const auto lg = partition(g, scheme);
  const auto lh = partition(h, scheme);
  std::map<PartitionIndex, std::pair<std::vector<Vertex>, std::vector<Vertex>>> parts;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    parts[lg.labels[v]].first.push_back(v);
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    parts[lh.labels[v]].second.push_back(v);
  for (const auto &[index, members] : parts) {
    if (members.first.size() != members.second.size())
      return false;
    if (!are_isomorphic(induced_subgraph(g, members.first).graph,
                        induced_subgraph(h, members.second).graph)
             .isomorphic)
      return false;
  }
  return true;
}

bool interaction_isomorphic(const Graph &g, const Graph &h, Scheme scheme) {
  if (!partition_isomorphic(g, h, scheme))
    return false;
  return are_isomorphic(boundary_subgraph(g, partition(g, scheme)),
                        boundary_subgraph(h, partition(h, scheme)))
      .isomorphic;
}

}  // namespace gpnn
