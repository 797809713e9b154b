//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_COLORING_H_
#define GPNN_COLORING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "gpnn/graph.h"
#include "gpnn/interner.h"
#include "gpnn/partition.h"

namespace gpnn {

// Interaction type of an unordered vertex pair. SamePartitionEdge is c_e
// (named "inter-interaction" in the GPNN literature), CrossPartitionEdge is
// c_a ("intra-interaction"), NonEdge is c_n.
enum class PairTag : std::int64_t {
  kSamePartitionEdge = 0,
  kCrossPartitionEdge = 1,
  kNonEdge = 2,
  kSelfPair = 3,
};

std::string_view pair_tag_name(PairTag tag);

// Which ordered pairs carry a refined interaction color.
enum class Variant {
  kStar,     // cross-partition edges
  kDiamond,  // all edges
  kDagger,   // all distinct pairs
};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
std::span<const Variant> all_variants();

struct PartitionColoring {
  PartitionLabeling labeling;
  std::vector<Color> lambda_v;  // interned from labeling.labels

  Scheme scheme() const { return labeling.scheme; }
  const PartitionIndex &label(Vertex v) const { return labeling.labels[v]; }
};

// Interning keys. Vertex colors and pair colors are keyed by canonical
// partition indices, so equal labels in two graphs sharing one table get
// equal identifiers.
Signature vertex_color_key(const PartitionIndex &label);
Signature pair_color_key(const PartitionIndex &a, const PartitionIndex &b, PairTag tag);

PartitionColoring build_coloring(const Graph &g, PartitionLabeling labeling,
                                 Interner &table);

// Builds colorings for several graphs of one comparison. Labels are interned
// in sorted order first, so identifiers do not depend on argument order.
std::vector<PartitionColoring> build_colorings(std::span<const Graph *const> graphs,
                                               Scheme scheme, Interner &table);

PairTag pair_tag(const PartitionColoring &c, const Graph &g, Vertex v, Vertex u);

// Interned λ_E(v, u): the tuple (sorted vertex labels, tag). v == u yields
// the SelfPair color.
Color pair_color(const PartitionColoring &c, const Graph &g, Vertex v, Vertex u,
                 Interner &table);

struct ColoredPart {
  PartitionIndex index;
  Color color = 0;
  std::vector<Vertex> members;  // ascending
};

// N_d(v) with v itself, split by vertex color; parts ascending by index.
std::vector<ColoredPart> colored_neighborhood(const Graph &g, const PartitionColoring &c,
                                              Vertex v, int d);

// Ordered pairs (v, u) tracked under the variant, sorted.
std::vector<Edge> tracked_pairs(const Graph &g, const PartitionLabeling &labeling,
                                Variant variant);
std::int64_t tracked_pair_count(const Graph &g, const PartitionLabeling &labeling,
                                Variant variant);

using PairColorKey = std::tuple<PartitionIndex, PartitionIndex, PairTag>;

// Histogram of λ_E over all unordered distinct pairs, non-edges included.
std::map<PairColorKey, std::int64_t> pair_color_histogram(const Graph &g,
                                                         const PartitionLabeling &labeling);

// G ≡λ H: equal vertex-color histograms and equal pair-color histograms.
bool lambda_equivalent(const Graph &g, const Graph &h, Scheme scheme);

}  // namespace gpnn

#endif  // GPNN_COLORING_H_
