//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/coloring.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gpnn {

namespace {

// Leading key element; keeps vertex and pair keys disjoint.
enum KeyKind : std::int64_t { kVertexKey = 1, kPairKey = 2 };

constexpr std::array<Variant, 3> kVariants = {Variant::kStar, Variant::kDiamond,
                                              Variant::kDagger};
constexpr std::array<std::string_view, 3> kVariantNames = {"star", "diamond", "dagger"};

}  // namespace

std::string_view pair_tag_name(PairTag tag) {
  switch (tag) {
  case PairTag::kSamePartitionEdge:
    return "same-partition-edge";
  case PairTag::kCrossPartitionEdge:
    return "cross-partition-edge";
  case PairTag::kNonEdge:
    return "non-edge";
  case PairTag::kSelfPair:
    return "self";
  }
  return "?";
}

std::string_view variant_name(Variant v) {
  return kVariantNames[static_cast<std::size_t>(v)];
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (std::size_t i = 0; i < kVariantNames.size(); ++i)
    if (kVariantNames[i] == name)
      return kVariants[i];
  return std::nullopt;
}

std::span<const Variant> all_variants() { return kVariants; }

Signature vertex_color_key(const PartitionIndex &label) {
  return {kVertexKey, label.major, label.minor};
}

Signature pair_color_key(const PartitionIndex &a, const PartitionIndex &b, PairTag tag) {
  const auto &[lo, hi] = std::minmax(a, b);
  return {kPairKey, lo.major, lo.minor, hi.major, hi.minor, static_cast<std::int64_t>(tag)};
}

PartitionColoring build_coloring(const Graph &g, PartitionLabeling labeling,
                                 Interner &table) {
  if (static_cast<Vertex>(labeling.labels.size()) != g.num_vertices())
    throw std::invalid_argument("labeling does not match graph");
  PartitionColoring c;
  c.labeling = std::move(labeling);
  c.lambda_v.reserve(c.labeling.labels.size());
  for (const auto &l : c.labeling.labels)
    c.lambda_v.push_back(table.intern(vertex_color_key(l)));
  return c;
}

std::vector<PartitionColoring> build_colorings(std::span<const Graph *const> graphs,
                                               Scheme scheme, Interner &table) {
  std::vector<PartitionLabeling> labelings;
  std::vector<PartitionIndex> all;
  for (const Graph *g : graphs) {
    labelings.push_back(partition(*g, scheme));
    const auto d = labelings.back().distinct();
    all.insert(all.end(), d.begin(), d.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto &l : all)
    table.intern(vertex_color_key(l));

  std::vector<PartitionColoring> out;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    out.push_back(build_coloring(*graphs[i], std::move(labelings[i]), table));
  return out;
}

PairTag pair_tag(const PartitionColoring &c, const Graph &g, Vertex v, Vertex u) {
  if (v == u)
    return PairTag::kSelfPair;
  if (!g.has_edge(v, u))
    return PairTag::kNonEdge;
  return c.label(v) == c.label(u) ? PairTag::kSamePartitionEdge
                                  : PairTag::kCrossPartitionEdge;
}

Color pair_color(const PartitionColoring &c, const Graph &g, Vertex v, Vertex u,
                 Interner &table) {
  return table.intern(pair_color_key(c.label(v), c.label(u), pair_tag(c, g, v, u)));
}

std::vector<ColoredPart> colored_neighborhood(const Graph &g, const PartitionColoring &c,
                                              Vertex v, int d) {
  std::map<PartitionIndex, ColoredPart> parts;
  for (Vertex u : neighborhood_d(g, v, d, /*include_self=*/true)) {
    auto &part = parts[c.label(u)];
    part.index = c.label(u);
    part.color = c.lambda_v[u];
    part.members.push_back(u);
  }
  std::vector<ColoredPart> out;
  out.reserve(parts.size());
  for (auto &[index, part] : parts)
    out.push_back(std::move(part));
  return out;
}

std::vector<Edge> tracked_pairs(const Graph &g, const PartitionLabeling &labeling,
                                Variant variant) {
  std::vector<Edge> out;
  const Vertex n = g.num_vertices();
  switch (variant) {
  case Variant::kStar:
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v))
        if (labeling.labels[v] != labeling.labels[u])
          out.emplace_back(v, u);
    break;
  case Variant::kDiamond:
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v))
        out.emplace_back(v, u);
    break;
  case Variant::kDagger:
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        if (u != v)
          out.emplace_back(v, u);
    break;
  }
  return out;
}

std::int64_t tracked_pair_count(const Graph &g, const PartitionLabeling &labeling,
                                Variant variant) {
  const std::int64_t n = g.num_vertices();
  switch (variant) {
  case Variant::kStar: {
    std::int64_t count = 0;
    for (auto [u, v] : g.edges())
      count += labeling.labels[u] != labeling.labels[v];
    return 2 * count;
  }
  case Variant::kDiamond:
    return 2 * g.num_edges();
  case Variant::kDagger:
    return n * (n - 1);
  }
  return 0;
}

std::map<PairColorKey, std::int64_t> pair_color_histogram(const Graph &g,
                                                         const PartitionLabeling &labeling) {
  std::map<PartitionIndex, std::int64_t> sizes;
  for (const auto &l : labeling.labels)
    ++sizes[l];

  std::map<PairColorKey, std::int64_t> hist;
  std::map<std::pair<PartitionIndex, PartitionIndex>, std::int64_t> edges_between;
  for (auto [u, v] : g.edges()) {
    const auto &[lo, hi] = std::minmax(labeling.labels[u], labeling.labels[v]);
    const PairTag tag = lo == hi ? PairTag::kSamePartitionEdge : PairTag::kCrossPartitionEdge;
    ++hist[{lo, hi, tag}];
    ++edges_between[{lo, hi}];
  }
  for (auto a = sizes.begin(); a != sizes.end(); ++a)
    for (auto b = a; b != sizes.end(); ++b) {
      const std::int64_t pairs = a == b ? a->second * (a->second - 1) / 2
                                        : a->second * b->second;
      const auto it = edges_between.find({a->first, b->first});
      const std::int64_t non_edges = pairs - (it == edges_between.end() ? 0 : it->second);
      if (non_edges > 0)
        hist[{a->first, b->first, PairTag::kNonEdge}] = non_edges;
    }
  return hist;
}

bool lambda_equivalent(const Graph &g, const Graph &h, Scheme scheme) {
  if (g.num_vertices() != h.num_vertices())
    return false;
  const auto lg = partition(g, scheme);
  const auto lh = partition(h, scheme);
  return lg.multiset() == lh.multiset() &&
         pair_color_histogram(g, lg) == pair_color_histogram(h, lh);
}

}  // namespace gpnn
