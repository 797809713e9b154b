//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/refinement.h"

#include <algorithm>
#include <stdexcept>

namespace gpnn {

std::int64_t RefinementState::tracked_index(Vertex v, Vertex u) const {
  const auto first = tracked_u.begin() + tracked_offsets[v];
  const auto last = tracked_u.begin() + tracked_offsets[v + 1];
  const auto it = std::lower_bound(first, last, u);
  if (it == last || *it != u)
    return -1;
  return it - tracked_u.begin();
}

Color RefinementState::interaction(const Graph &g, const PartitionColoring &c, Vertex v,
                                   Vertex u) const {
  if (v == u)
    return self_color[cls[v]];
  if (const auto i = tracked_index(v, u); i >= 0)
    return alpha[i];
  const auto tag = static_cast<std::size_t>(pair_tag(c, g, v, u));
  return static_color[(static_cast<std::size_t>(cls[v]) * num_classes + cls[u]) * 3 + tag];
}

RefinementState init_state(const Graph &g, const PartitionColoring &coloring,
                           const GpnnConfig &config, Interner &table) {
  if (config.d < 1)
    throw std::invalid_argument("hop radius must be >= 1");
  const Vertex n = g.num_vertices();
  RefinementState s;
  s.beta = coloring.lambda_v;
  s.gamma = coloring.lambda_v;

  const auto classes = coloring.labeling.distinct();
  s.num_classes = static_cast<std::int32_t>(classes.size());
  s.cls.resize(n);
  for (Vertex v = 0; v < n; ++v)
    s.cls[v] = static_cast<std::int32_t>(
        std::lower_bound(classes.begin(), classes.end(), coloring.label(v)) - classes.begin());
  const std::size_t k = classes.size();
  s.static_color.resize(k * k * 3);
  s.self_color.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    s.self_color[a] = table.intern(pair_color_key(classes[a], classes[a], PairTag::kSelfPair));
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t tag = 0; tag < 3; ++tag)
        s.static_color[(a * k + b) * 3 + tag] =
            table.intern(pair_color_key(classes[a], classes[b], static_cast<PairTag>(tag)));
  }

  s.hood.resize(n);
  for (Vertex v = 0; v < n; ++v)
    s.hood[v] = neighborhood_d(g, v, config.d, /*include_self=*/true);

  const auto pairs = tracked_pairs(g, coloring.labeling, config.variant);
  s.tracked_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [v, u] : pairs)
    ++s.tracked_offsets[v + 1];
  for (Vertex v = 0; v < n; ++v)
    s.tracked_offsets[v + 1] += s.tracked_offsets[v];
  s.tracked_u.reserve(pairs.size());
  s.alpha.reserve(pairs.size());
  for (auto [v, u] : pairs) {
    s.tracked_u.push_back(u);
    const auto tag = static_cast<std::size_t>(pair_tag(coloring, g, v, u));
    s.alpha.push_back(s.static_color[(static_cast<std::size_t>(s.cls[v]) * k + s.cls[u]) * 3 + tag]);
  }
  return s;
}

namespace {

Signature beta_signature(const Graph &g, const RefinementState &s, Vertex v) {
  Signature sig;
  sig.reserve(static_cast<std::size_t>(g.degree(v)) + 1);
  sig.push_back(s.gamma[v]);
  for (Vertex u : g.neighbors(v))
    sig.push_back(s.gamma[u]);
  std::sort(sig.begin() + 1, sig.end());
  return sig;
}

Signature alpha_signature(const Graph &g, const PartitionColoring &c, const RefinementState &s,
                          Vertex v, Vertex u, Color current, bool symmetric) {
  std::vector<Vertex> scope;
  if (symmetric) {
    std::set_union(s.hood[v].begin(), s.hood[v].end(), s.hood[u].begin(), s.hood[u].end(),
                   std::back_inserter(scope));
  }
  const auto &ws = symmetric ? scope : s.hood[v];
  std::vector<std::pair<Color, Color>> ms;
  ms.reserve(ws.size());
  for (Vertex w : ws)
    ms.emplace_back(s.interaction(g, c, v, w), s.interaction(g, c, u, w));
  std::sort(ms.begin(), ms.end());
  Signature sig;
  sig.reserve(2 * ms.size() + 1);
  sig.push_back(current);
  for (auto [a, b] : ms) {
    sig.push_back(a);
    sig.push_back(b);
  }
  return sig;
}

// Per-partition multisets of (β(u), a(v, u)) over N_d(v), concatenated in
// ascending partition-index order, each prefixed by its index and size.
Signature gamma_signature(const Graph &g, const PartitionColoring &c, const RefinementState &s,
                          Vertex v) {
  struct Entry {
    PartitionIndex part;
    Color beta;
    Color pair;
    auto operator<=>(const Entry &) const = default;
  };
  std::vector<Entry> entries;
  entries.reserve(s.hood[v].size());
  for (Vertex u : s.hood[v])
    entries.push_back({c.label(u), s.beta[u], s.interaction(g, c, v, u)});
  std::sort(entries.begin(), entries.end());

  Signature sig;
  sig.reserve(3 * entries.size() + 3);
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].part == entries[i].part)
      ++j;
    sig.push_back(entries[i].part.major);
    sig.push_back(entries[i].part.minor);
    sig.push_back(static_cast<std::int64_t>(j - i));
    for (std::size_t x = i; x < j; ++x) {
      sig.push_back(entries[x].beta);
      sig.push_back(entries[x].pair);
    }
    i = j;
  }
  return sig;
}

}  // namespace

StepResult gpnn_step_joint(std::span<RefinementState *const> states,
                           std::span<const Graph *const> graphs,
                           std::span<const PartitionColoring *const> colorings,
                           const GpnnConfig &config, Interner &table) {
  const std::size_t count = states.size();
  std::vector<Signature> sigs;

  // β^{t+1} from γ^t over N(v).
  for (std::size_t i = 0; i < count; ++i)
    for (Vertex v = 0; v < graphs[i]->num_vertices(); ++v)
      sigs.push_back(beta_signature(*graphs[i], *states[i], v));
  {
    const auto ids = table.fresh_batch(sigs);
    std::size_t at = 0;
    for (std::size_t i = 0; i < count; ++i)
      for (auto &b : states[i]->beta)
        b = ids[at++];
  }

  // α^{t+1} on tracked pairs, reading α^t through interaction().
  sigs.clear();
  StepResult result;
  for (std::size_t i = 0; i < count; ++i) {
    const auto &s = *states[i];
    for (Vertex v = 0; v < graphs[i]->num_vertices(); ++v)
      for (auto x = s.tracked_offsets[v]; x < s.tracked_offsets[v + 1]; ++x)
        sigs.push_back(alpha_signature(*graphs[i], *colorings[i], s, v, s.tracked_u[x],
                                       s.alpha[x], config.symmetric_interactions));
  }
  {
    const auto ids = table.fresh_batch(sigs);
    result.alpha_classes = table.last_batch_classes();
    std::size_t at = 0;
    for (std::size_t i = 0; i < count; ++i)
      for (auto &a : states[i]->alpha)
        a = ids[at++];
  }

  // γ^{t+1} from β^{t+1} and α^{t+1}.
  sigs.clear();
  for (std::size_t i = 0; i < count; ++i)
    for (Vertex v = 0; v < graphs[i]->num_vertices(); ++v)
      sigs.push_back(gamma_signature(*graphs[i], *colorings[i], *states[i], v));
  {
    const auto ids = table.fresh_batch(sigs);
    result.gamma_classes = table.last_batch_classes();
    std::size_t at = 0;
    for (std::size_t i = 0; i < count; ++i) {
      for (auto &c : states[i]->gamma)
        c = ids[at++];
      ++states[i]->layer;
    }
  }
  return result;
}

void gpnn_step(RefinementState &state, const Graph &g, const PartitionColoring &coloring,
               const GpnnConfig &config, Interner &table) {
  RefinementState *s[] = {&state};
  const Graph *gs[] = {&g};
  const PartitionColoring *cs[] = {&coloring};
  gpnn_step_joint(s, gs, cs, config, table);
}

namespace {

std::int64_t distinct_count(std::vector<Color> all) {
  std::sort(all.begin(), all.end());
  return std::unique(all.begin(), all.end()) - all.begin();
}

}  // namespace

Verdict gpnn_compare(const Graph &g, const Graph &h, const GpnnConfig &config) {
  Interner table;
  const Graph *graphs[] = {&g, &h};
  auto colorings = build_colorings(graphs, config.scheme, table);
  auto finish = [](Outcome o, int t, const RefinementState &a, const RefinementState &b) {
    return Verdict{o, t, make_histogram(a.gamma), make_histogram(b.gamma)};
  };

  RefinementState sg = init_state(g, colorings[0], config, table);
  RefinementState sh = init_state(h, colorings[1], config, table);
  if (g.num_vertices() != h.num_vertices() ||
      make_histogram(sg.gamma) != make_histogram(sh.gamma))
    return finish(Outcome::kDistinguished, 0, sg, sh);

  std::vector<Color> all = sg.gamma;
  all.insert(all.end(), sh.gamma.begin(), sh.gamma.end());
  std::int64_t gamma_classes = distinct_count(all);
  all = sg.alpha;
  all.insert(all.end(), sh.alpha.begin(), sh.alpha.end());
  std::int64_t alpha_classes = distinct_count(all);

  // Every non-final layer splits at least one γ or α class.
  const int cap = config.max_layers > 0
                      ? config.max_layers
                      : static_cast<int>(2 * g.num_vertices() + sg.alpha.size() +
                                         sh.alpha.size() + 1);
  RefinementState *states[] = {&sg, &sh};
  const PartitionColoring *cs[] = {&colorings[0], &colorings[1]};
  for (int t = 1; t <= cap; ++t) {
    const StepResult r = gpnn_step_joint(states, graphs, cs, config, table);
    if (make_histogram(sg.gamma) != make_histogram(sh.gamma))
      return finish(Outcome::kDistinguished, t, sg, sh);
    if (r.gamma_classes == gamma_classes && r.alpha_classes == alpha_classes)
      return finish(Outcome::kEquivalent, t, sg, sh);
    gamma_classes = r.gamma_classes;
    alpha_classes = r.alpha_classes;
  }
  return finish(Outcome::kEquivalent, cap, sg, sh);
}

InteractionCost interaction_cost(const Graph &g, const PartitionLabeling &labeling,
                                 Variant variant, int d) {
  InteractionCost cost;
  cost.tracked_pairs = tracked_pair_count(g, labeling, variant);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::int64_t size = d == 1 ? g.degree(v) + 1
                                     : static_cast<std::int64_t>(
                                           neighborhood_d(g, v, d, true).size());
    cost.q = std::max(cost.q, size);
  }
  return cost;
}

}  // namespace gpnn
