//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_WL_H_
#define GPNN_WL_H_

#include <optional>
#include <span>
#include <vector>

#include "gpnn/graph.h"
#include "gpnn/interner.h"
#include "gpnn/verdict.h"

namespace gpnn {

// 1-WL color refinement run on both graphs in lockstep, one shared batch of
// identifiers per round. Initial colors must come from `table`. Stops at the
// first histogram mismatch or once the joint partition is stable; at most
// n_G + n_H rounds.
Verdict wl1_compare(const Graph &g, const Graph &h, std::span<const Color> init_g,
                    std::span<const Color> init_h, Interner &table);
// Plain 1-WL from uniform colors.
Verdict wl1_compare(const Graph &g, const Graph &h);

// Stable 1-WL coloring of a single graph. Colors are canonical: isomorphic
// inputs give the same color to corresponding vertices, provided the initial
// colors correspond.
std::vector<Color> wl1_stable_coloring(const Graph &g, std::span<const Color> init,
                                       Interner &table);

// 2-FWL (equivalent in power to 3-WL) over ordered vertex pairs. Initial pair
// colors are self / edge / non-edge, optionally combined with the two vertex
// colors. Aggregates over every w in V. At most n^2 rounds.
Verdict fwl2_compare(const Graph &g, const Graph &h,
                     std::optional<std::span<const Color>> init_g,
                     std::optional<std::span<const Color>> init_h, Interner &table);
Verdict fwl2_compare(const Graph &g, const Graph &h);

}  // namespace gpnn

#endif  // GPNN_WL_H_
