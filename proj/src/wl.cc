//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/wl.h"

#include <algorithm>
#include <map>

namespace gpnn {

std::string_view outcome_name(Outcome o) {
  return o == Outcome::kDistinguished ? "distinguished" : "equivalent";
}

Histogram make_histogram(std::span<const Color> colors) {
  std::map<Color, std::int64_t> counts;
  for (Color c : colors)
    ++counts[c];
  return {counts.begin(), counts.end()};
}

namespace {

std::int64_t count_classes(std::span<const Color> a, std::span<const Color> b) {
  std::vector<Color> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return std::unique(all.begin(), all.end()) - all.begin();
}

Verdict finish(Outcome o, int t, std::span<const Color> a, std::span<const Color> b) {
  return {o, t, make_histogram(a), make_histogram(b)};
}

Signature wl1_signature(const Graph &g, const std::vector<Color> &c, Vertex v) {
  Signature sig;
  sig.reserve(static_cast<std::size_t>(g.degree(v)) + 1);
  sig.push_back(c[v]);
  for (Vertex u : g.neighbors(v))
    sig.push_back(c[u]);
  std::sort(sig.begin() + 1, sig.end());
  return sig;
}

}  // namespace

Verdict wl1_compare(const Graph &g, const Graph &h, std::span<const Color> init_g,
                    std::span<const Color> init_h, Interner &table) {
  std::vector<Color> cg(init_g.begin(), init_g.end());
  std::vector<Color> ch(init_h.begin(), init_h.end());
  if (g.num_vertices() != h.num_vertices() || make_histogram(cg) != make_histogram(ch))
    return finish(Outcome::kDistinguished, 0, cg, ch);

  const Vertex ng = g.num_vertices();
  const Vertex nh = h.num_vertices();
  std::int64_t classes = count_classes(cg, ch);
  const int cap = ng + nh;
  for (int t = 1; t <= cap; ++t) {
    std::vector<Signature> sigs;
    sigs.reserve(static_cast<std::size_t>(ng + nh));
    for (Vertex v = 0; v < ng; ++v)
      sigs.push_back(wl1_signature(g, cg, v));
    for (Vertex v = 0; v < nh; ++v)
      sigs.push_back(wl1_signature(h, ch, v));
    const auto ids = table.fresh_batch(sigs);
    std::copy(ids.begin(), ids.begin() + ng, cg.begin());
    std::copy(ids.begin() + ng, ids.end(), ch.begin());

    if (make_histogram(cg) != make_histogram(ch))
      return finish(Outcome::kDistinguished, t, cg, ch);
    if (table.last_batch_classes() == classes)
      return finish(Outcome::kEquivalent, t, cg, ch);
    classes = table.last_batch_classes();
  }
  return finish(Outcome::kEquivalent, cap, cg, ch);
}

Verdict wl1_compare(const Graph &g, const Graph &h) {
  Interner table;
  const Color uniform = table.intern({0});
  const std::vector<Color> ig(g.num_vertices(), uniform);
  const std::vector<Color> ih(h.num_vertices(), uniform);
  return wl1_compare(g, h, ig, ih, table);
}

std::vector<Color> wl1_stable_coloring(const Graph &g, std::span<const Color> init,
                                       Interner &table) {
  std::vector<Color> c(init.begin(), init.end());
  std::int64_t classes = count_classes(c, {});
  for (;;) {
    std::vector<Signature> sigs;
    sigs.reserve(c.size());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      sigs.push_back(wl1_signature(g, c, v));
    c = table.fresh_batch(sigs);
    if (table.last_batch_classes() == classes)
      return c;
    classes = table.last_batch_classes();
  }
}

namespace {

enum Fwl2Initial : std::int64_t { kSelf = 0, kInteraction = 1, kNonInteraction = 2 };

std::vector<Color> fwl2_initial(const Graph &g, std::optional<std::span<const Color>> vc,
                                Interner &table) {
  const Vertex n = g.num_vertices();
  std::vector<Color> c(static_cast<std::size_t>(n) * n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u) {
      const std::int64_t kind = u == v ? kSelf : g.has_edge(v, u) ? kInteraction : kNonInteraction;
      c[static_cast<std::size_t>(v) * n + u] =
          vc ? table.intern({3, kind, (*vc)[v], (*vc)[u]}) : table.intern({3, kind});
    }
  return c;
}

void fwl2_signatures(Vertex n, const std::vector<Color> &c, std::vector<Signature> &out) {
  std::vector<std::pair<Color, Color>> ms(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w)
        ms[w] = {c[static_cast<std::size_t>(v) * n + w], c[static_cast<std::size_t>(u) * n + w]};
      std::sort(ms.begin(), ms.end());
      Signature sig;
      sig.reserve(2 * static_cast<std::size_t>(n) + 1);
      sig.push_back(c[static_cast<std::size_t>(v) * n + u]);
      for (auto [a, b] : ms) {
        sig.push_back(a);
        sig.push_back(b);
      }
      out.push_back(std::move(sig));
    }
}

}  // namespace

Verdict fwl2_compare(const Graph &g, const Graph &h,
                     std::optional<std::span<const Color>> init_g,
                     std::optional<std::span<const Color>> init_h, Interner &table) {
  std::vector<Color> cg = fwl2_initial(g, init_g, table);
  std::vector<Color> ch = fwl2_initial(h, init_h, table);
  if (g.num_vertices() != h.num_vertices() || make_histogram(cg) != make_histogram(ch))
    return finish(Outcome::kDistinguished, 0, cg, ch);

  const Vertex n = g.num_vertices();
  std::int64_t classes = count_classes(cg, ch);
  const int cap = n * n;
  for (int t = 1; t <= cap; ++t) {
    std::vector<Signature> sigs;
    sigs.reserve(2 * cg.size());
    fwl2_signatures(n, cg, sigs);
    fwl2_signatures(n, ch, sigs);
    const auto ids = table.fresh_batch(sigs);
    const auto half = static_cast<std::ptrdiff_t>(cg.size());
    std::copy(ids.begin(), ids.begin() + half, cg.begin());
    std::copy(ids.begin() + half, ids.end(), ch.begin());

    if (make_histogram(cg) != make_histogram(ch))
      return finish(Outcome::kDistinguished, t, cg, ch);
    if (table.last_batch_classes() == classes)
      return finish(Outcome::kEquivalent, t, cg, ch);
    classes = table.last_batch_classes();
  }
  return finish(Outcome::kEquivalent, cap, cg, ch);
}

Verdict fwl2_compare(const Graph &g, const Graph &h) {
  Interner table;
  return fwl2_compare(g, h, std::nullopt, std::nullopt, table);
}

}  // namespace gpnn
