//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/harness.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

#include "gpnn/generators.h"
#include "gpnn/isomorphism.h"
#include "gpnn/refinement.h"
#include "gpnn/wl.h"

namespace gpnn {

void PairSuite::add(std::string name, Graph first, Graph second, std::string note) {
  pairs.push_back({std::move(name), std::move(first), std::move(second), std::move(note)});
}

void PairSuite::append(PairSuite other) {
  for (auto &p : other.pairs)
    pairs.push_back(std::move(p));
}

void PairSuite::validate() const {
  std::set<std::string> names;
  for (const auto &p : pairs)
    if (!names.insert(p.name).second)
      throw std::invalid_argument("duplicate pair name: " + p.name);
}

namespace {

Graph decalin() {
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                    {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0}});
}

Graph bicyclopentyl() {
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                    {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {0, 5}});
}

Graph prism(Vertex k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return Graph::from_edge_list(2 * k, e);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j)
      e.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, e);
}

Graph mobius_ladder(Vertex k) {
  // Cycle on 2k vertices plus the k long diagonals.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 2 * k; ++i)
    e.emplace_back(i, (i + 1) % (2 * k));
  for (Vertex i = 0; i < k; ++i)
    e.emplace_back(i, i + k);
  return Graph::from_edge_list(2 * k, e);
}

Graph cycles(Vertex len, Vertex copies) {
  const double params[] = {static_cast<double>(len), static_cast<double>(copies)};
  return generate(GraphKind::kDisjointCycles, params, 0);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string index_name(std::string_view prefix, int i) {
  std::string digits = std::to_string(i);
  return std::string(prefix) + std::string(digits.size() < 4 ? 4 - digits.size() : 0, '0') +
         digits;
}

std::vector<Vertex> degree_sequence(const Graph &g) {
  std::vector<Vertex> d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

PairSuite named_hard_pairs() {
  PairSuite s;
  s.add("c6_vs_2c3", cycle_graph(6), cycles(3, 2), "2-regular, 1-WL equivalent");
  s.add("c6_vs_p6", cycle_graph(6), path_graph(6), "degree sequences differ");
  s.add("c8_vs_2c4", cycle_graph(8), cycles(4, 2), "2-regular, triangle-free");
  s.add("c9_vs_3c3", cycle_graph(9), cycles(3, 3), "2-regular");
  s.add("k33_vs_prism", complete_bipartite(3, 3), prism(3), "3-regular on 6 vertices");
  s.add("cube_vs_mobius8", prism(4), mobius_ladder(4), "3-regular on 8 vertices");
  s.add("decalin_vs_bicyclopentyl", decalin(), bicyclopentyl(), "1-WL equivalent molecules");
  s.add("shrikhande_vs_rook4x4", shrikhande_graph(), rook_graph_4x4(), "srg(16,6,2,2)");
  return s;
}

PairSuite permuted_pairs(int count, std::uint64_t seed) {
  PairSuite s;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t r = mix(seed, static_cast<std::uint64_t>(i));
    const Vertex n = 4 + static_cast<Vertex>(r % 9);
    const double p = 0.2 + 0.1 * static_cast<double>((r >> 8) % 5);
    const Graph g = gnp(n, p, mix(r, 1));
    s.add(index_name("perm_", i), g, apply_permutation(g, random_permutation(n, mix(r, 2))),
          "relabeled copy");
  }
  return s;
}

PairSuite random_regular_pairs(int count, std::uint64_t seed) {
  static constexpr std::array<std::pair<Vertex, Vertex>, 10> kShapes = {{
      {8, 3}, {10, 3}, {12, 3}, {14, 3}, {16, 3},
      {10, 4}, {12, 4}, {14, 4}, {16, 4}, {12, 5},
  }};
  PairSuite s;
  for (int i = 0; i < count; ++i) {
    const auto [n, d] = kShapes[static_cast<std::size_t>(i) % kShapes.size()];
    const std::uint64_t r = mix(seed, static_cast<std::uint64_t>(i));
    s.add(index_name("rreg_", i), random_regular(n, d, mix(r, 1)), random_regular(n, d, mix(r, 2)),
          "random " + std::to_string(d) + "-regular on " + std::to_string(n) + " vertices");
  }
  return s;
}

PairSuite random_gnp_pairs(int count, std::uint64_t seed) {
  PairSuite s;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t r = mix(seed, static_cast<std::uint64_t>(i));
    const Vertex n = 5 + static_cast<Vertex>(r % 8);
    const double p = 0.3 + 0.05 * static_cast<double>((r >> 8) % 5);
    s.add(index_name("gnp_", i), gnp(n, p, mix(r, 1)), gnp(n, p, mix(r, 2)), "G(n, p)");
  }
  return s;
}

PairSuite corpus_pairs(Vertex n_max, bool same_degree_sequence) {
  PairSuite s;
  for (Vertex n = 2; n <= n_max; ++n) {
    const auto graphs = enumerate_all(n);
    std::vector<std::vector<Vertex>> seqs;
    for (const auto &g : graphs)
      seqs.push_back(degree_sequence(g));
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        if (same_degree_sequence && seqs[i] != seqs[j])
          continue;
        s.add("n" + std::to_string(n) + "_" + std::to_string(i) + "_" + std::to_string(j),
              graphs[i], graphs[j]);
      }
  }
  return s;
}

PairSuite corpus_wl1_equivalent_pairs(Vertex n_max) {
  PairSuite all = corpus_pairs(n_max, true);
  PairSuite s;
  for (auto &p : all.pairs)
    if (wl1_compare(p.first, p.second).equivalent())
      s.pairs.push_back(std::move(p));
  return s;
}

std::optional<Outcome> PairVerdicts::gpnn_outcome(Scheme s, Variant v) const {
  for (const auto &c : gpnn)
    if (c.scheme == s && c.variant == v)
      return c.outcome;
  return std::nullopt;
}

std::optional<bool> PairVerdicts::lambda_eq(Scheme s) const {
  for (const auto &[scheme, eq] : lambda_equivalent)
    if (scheme == s)
      return eq;
  return std::nullopt;
}

namespace {

SuiteOptions with_defaults(SuiteOptions o) {
  if (o.schemes.empty())
    o.schemes.assign(all_schemes().begin(), all_schemes().end());
  if (o.variants.empty())
    o.variants.assign(all_variants().begin(), all_variants().end());
  return o;
}

bool is_d(std::optional<Outcome> o) { return o && *o == Outcome::kDistinguished; }
bool is_e(std::optional<Outcome> o) { return o && *o == Outcome::kEquivalent; }

std::string config_name(Scheme s, Variant v) {
  return std::string(scheme_name(s)) + "/" + std::string(variant_name(v));
}

}  // namespace

PairVerdicts evaluate_pair(const NamedPair &pair, const SuiteOptions &raw) {
  const SuiteOptions options = with_defaults(raw);
  PairVerdicts row;
  row.name = pair.name;
  row.n = std::max(pair.first.num_vertices(), pair.second.num_vertices());
  row.wl1 = wl1_compare(pair.first, pair.second).outcome;
  if (row.n <= options.fwl2_max_n)
    row.fwl2 = fwl2_compare(pair.first, pair.second).outcome;
  for (Scheme s : options.schemes) {
    row.lambda_equivalent.emplace_back(s, lambda_equivalent(pair.first, pair.second, s));
    for (Variant v : options.variants) {
      GpnnConfig config;
      config.scheme = s;
      config.variant = v;
      config.d = options.d;
      row.gpnn.push_back({s, v, gpnn_compare(pair.first, pair.second, config).outcome});
    }
  }
  return row;
}

void check_pair(const PairVerdicts &row, std::vector<Violation> &out) {
  auto flag = [&](std::string check, std::string detail) {
    out.push_back({std::move(check), row.name, std::move(detail)});
  };

  if (const auto o = row.gpnn_outcome(Scheme::kTrivial, Variant::kStar); o && *o != row.wl1)
    flag("trivial-star-equals-1wl", "gpnn " + std::string(outcome_name(*o)) + ", 1-WL " +
                                        std::string(outcome_name(row.wl1)));

  std::set<Scheme> schemes;
  for (const auto &c : row.gpnn)
    schemes.insert(c.scheme);

  constexpr std::array<std::pair<Variant, Variant>, 3> kOrder = {{
      {Variant::kStar, Variant::kDiamond},
      {Variant::kDiamond, Variant::kDagger},
      {Variant::kStar, Variant::kDagger},
  }};
  for (Scheme s : schemes)
    for (auto [weak, strong] : kOrder)
      if (is_d(row.gpnn_outcome(s, weak)) && is_e(row.gpnn_outcome(s, strong)))
        flag("variant-monotonicity", config_name(s, weak) + " distinguishes but " +
                                         config_name(s, strong) + " does not");

  for (Scheme finer : {Scheme::kCoreDegree, Scheme::kCoreOnion})
    for (Variant v : all_variants())
      if (is_d(row.gpnn_outcome(Scheme::kCore, v)) && is_e(row.gpnn_outcome(finer, v)))
        flag("scheme-monotonicity", config_name(Scheme::kCore, v) + " distinguishes but " +
                                        config_name(finer, v) + " does not");

  if (is_e(row.fwl2) && is_d(row.gpnn_outcome(Scheme::kTrivial, Variant::kDagger)))
    flag("dagger-below-2fwl", "trivial/dagger distinguishes a 2-FWL-equivalent pair");

  for (const auto &c : row.gpnn) {
    const bool lower = row.wl1 == Outcome::kDistinguished || row.lambda_eq(c.scheme) == false;
    if (lower && c.outcome == Outcome::kEquivalent)
      flag("lower-bound", config_name(c.scheme, c.variant) +
                              " misses a pair separated by 1-WL or λ-equivalence");
  }
}

int harness_threads(int requested) {
  if (requested > 0)
    return requested;
  if (const char *env = std::getenv("GPNN_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0)
      return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

HierarchyReport run_suite(const PairSuite &suite, const SuiteOptions &raw) {
  suite.validate();
  const SuiteOptions options = with_defaults(raw);
  HierarchyReport report;
  report.schemes = options.schemes;
  report.variants = options.variants;
  report.d = options.d;
  report.rows.resize(suite.pairs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suite.pairs.size(); i = next++)
      report.rows[i] = evaluate_pair(suite.pairs[i], options);
  };
  const int threads = std::min<int>(harness_threads(options.threads),
                                    static_cast<int>(std::max<std::size_t>(suite.pairs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }

  std::sort(report.rows.begin(), report.rows.end(),
            [](const PairVerdicts &a, const PairVerdicts &b) { return a.name < b.name; });
  for (const auto &row : report.rows)
    check_pair(row, report.violations);
  return report;
}

namespace {

constexpr std::array<std::string_view, 4> kPredicateNames = {
    "pi-not-ii", "ii-not-gi", "wl1eq-triangle-distinct", "wl1eq-fwl2-distinct"};

bool matches(CounterexamplePredicate p, const Graph &g, const Graph &h, Scheme scheme) {
  switch (p) {
  case CounterexamplePredicate::kPiNotIi:
    return partition_isomorphic(g, h, scheme) && !interaction_isomorphic(g, h, scheme);
  case CounterexamplePredicate::kIiNotGi:
    return interaction_isomorphic(g, h, scheme) && !are_isomorphic(g, h).isomorphic;
  case CounterexamplePredicate::kWl1EqTriangleDistinct:
    return wl1_compare(g, h).equivalent() &&
           partition(g, Scheme::kTriangle).multiset() != partition(h, Scheme::kTriangle).multiset();
  case CounterexamplePredicate::kWl1EqFwl2Distinct:
    return wl1_compare(g, h).equivalent() && fwl2_compare(g, h).distinguished();
  }
  return false;
}

}  // namespace

std::string_view predicate_name(CounterexamplePredicate p) {
  return kPredicateNames[static_cast<std::size_t>(p)];
}

std::optional<CounterexamplePredicate> parse_predicate(std::string_view name) {
  for (std::size_t i = 0; i < kPredicateNames.size(); ++i)
    if (kPredicateNames[i] == name)
      return static_cast<CounterexamplePredicate>(i);
  return std::nullopt;
}

std::vector<std::pair<Graph, Graph>> search_counterexamples(CounterexamplePredicate predicate,
                                                            Vertex n_max, Scheme scheme,
                                                            std::size_t cap) {
  const bool wl_predicate = predicate == CounterexamplePredicate::kWl1EqTriangleDistinct ||
                            predicate == CounterexamplePredicate::kWl1EqFwl2Distinct;
  std::vector<std::pair<Graph, Graph>> out;
  for (Vertex n = 2; n <= n_max && out.size() < cap; ++n) {
    const auto graphs = enumerate_all(n);
    for (std::size_t i = 0; i < graphs.size() && out.size() < cap; ++i)
      for (std::size_t j = i + 1; j < graphs.size() && out.size() < cap; ++j) {
        if (wl_predicate && graphs[i].num_edges() != graphs[j].num_edges())
          continue;  // 1-WL equivalence implies equal edge counts
        if (matches(predicate, graphs[i], graphs[j], scheme))
          out.emplace_back(graphs[i], graphs[j]);
      }
  }
  return out;
}

ContainmentCheck check_isomorphism_containments(Vertex n_max, Scheme scheme,
                                                std::uint64_t seed) {
  ContainmentCheck c;
  auto record = [&](const Graph &g, const Graph &h) {
    const bool gi = are_isomorphic(g, h).isomorphic;
    const bool pi = partition_isomorphic(g, h, scheme);
    const bool ii = interaction_isomorphic(g, h, scheme);
    ++c.pairs;
    c.gi += gi;
    c.ii += ii;
    c.pi += pi;
    c.violations += (gi && !ii) || (ii && !pi);
  };
  std::uint64_t k = 0;
  for (Vertex n = 1; n <= n_max; ++n) {
    const auto graphs = enumerate_all(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      record(graphs[i], apply_permutation(graphs[i], random_permutation(n, mix(seed, k++))));
      for (std::size_t j = i + 1; j < graphs.size(); ++j)
        record(graphs[i], graphs[j]);
    }
  }
  return c;
}

}  // namespace gpnn
