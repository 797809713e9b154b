//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpnn/coloring.h"
#include "gpnn/generators.h"
#include "gpnn/graph.h"
#include "gpnn/harness.h"
#include "gpnn/io.h"
#include "gpnn/isomorphism.h"
#include "gpnn/neural.h"
#include "gpnn/partition.h"
#include "gpnn/refinement.h"
#include "gpnn/wl.h"

namespace {

using namespace gpnn;

// Usage problems detected after CLI11 has accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string &path) {
  try {
    return read_edge_list_file(path);
  } catch (const ParseError &e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Scheme to_scheme(const std::string &name) {
  if (auto s = parse_scheme(name))
    return *s;
  throw UsageError("unknown scheme '" + name + "'");
}

Variant to_variant(const std::string &name) {
  if (auto v = parse_variant(name))
    return *v;
  throw UsageError("unknown variant '" + name + "'");
}

std::string index_text(const PartitionIndex &i) {
  return "(" + std::to_string(i.major) + "," + std::to_string(i.minor) + ")";
}

void print_json(const Json &j) { std::cout << j.dump(2) << "\n"; }

const std::vector<std::string> kSchemeNames = {"trivial",     "degree",     "core",
                                               "core-degree", "core-onion", "triangle"};
const std::vector<std::string> kVariantNames = {"star", "diamond", "dagger"};

struct Options {
  bool json = false;
  std::string scheme = "degree";
  std::string variant = "star";
  int d = 1;
  std::string test = "1wl";
  std::string file1, file2;
  bool all = false;
  int threads = 0;
  std::string kind;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  int f = 8;
  int layers = 2;
  int k = 0;
  int trials = 10;
};

int cmd_partition(const Options &o) {
  const Graph g = load(o.file1);
  const PartitionLabeling lab = partition(g, to_scheme(o.scheme));
  if (o.json) {
    Json labels = Json::array();
    for (const auto &l : lab.labels)
      labels.push_back(index_to_json(l));
    print_json(Json{{"scheme", scheme_name(lab.scheme)}, {"labels", std::move(labels)}});
    return 0;
  }
  std::cout << "vertex  label\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    std::cout << v << "  " << index_text(lab.labels[v]) << "\n";
  return 0;
}

int cmd_stats(const Options &o) {
  const Graph g = load(o.file1);
  const PartitionStats st = partition_stats(g, partition(g, to_scheme(o.scheme)));
  if (o.json) {
    print_json(stats_to_json(st));
    return 0;
  }
  std::cout << "partitions             " << st.num_partitions << "\n"
            << "same-partition edges   " << st.same_partition_edges << "\n"
            << "cross-partition edges  " << st.cross_partition_edges << "\n";
  for (const auto &[index, pct] : st.vertex_distribution) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", pct);
    std::cout << "  " << index_text(index) << "  " << buf << "\n";
  }
  return 0;
}

int cmd_color(const Options &o) {
  const Graph g = load(o.file1);
  Interner table;
  const Graph *graphs[] = {&g};
  const PartitionColoring c = build_colorings(graphs, to_scheme(o.scheme), table)[0];
  const auto hist = pair_color_histogram(g, c.labeling);
  if (o.json) {
    Json colors = Json::array();
    for (Color col : c.lambda_v)
      colors.push_back(col);
    Json pairs = Json::array();
    for (const auto &[key, count] : hist) {
      const auto &[a, b, tag] = key;
      pairs.push_back(Json{{"labels", Json::array({index_to_json(a), index_to_json(b)})},
                           {"tag", pair_tag_name(tag)},
                           {"count", count}});
    }
    print_json(Json{{"scheme", scheme_name(c.scheme())},
                    {"vertex_colors", std::move(colors)},
                    {"pair_colors", std::move(pairs)}});
    return 0;
  }
  std::cout << "vertex  label  color\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    std::cout << v << "  " << index_text(c.label(v)) << "  " << c.lambda_v[v] << "\n";
  std::cout << "\npair colors (unordered distinct pairs)\n";
  for (const auto &[key, count] : hist) {
    const auto &[a, b, tag] = key;
    std::cout << "  " << index_text(a) << " " << index_text(b) << " " << pair_tag_name(tag)
              << "  " << count << "\n";
  }
  return 0;
}

int cmd_compare(const Options &o) {
  const Graph g = load(o.file1);
  const Graph h = load(o.file2);
  Verdict v;
  if (o.test == "1wl") {
    v = wl1_compare(g, h);
  } else if (o.test == "2fwl") {
    v = fwl2_compare(g, h);
  } else if (o.test == "gpnn") {
    if (o.d < 1)
      throw UsageError("--d must be at least 1");
    GpnnConfig cfg;
    cfg.scheme = to_scheme(o.scheme);
    cfg.variant = to_variant(o.variant);
    cfg.d = o.d;
    v = gpnn_compare(g, h, cfg);
  } else {
    throw UsageError("unknown test '" + o.test + "'");
  }
  if (o.json) {
    Json j = verdict_to_json(v);
    j["test"] = o.test;
    if (o.test == "gpnn") {
      j["scheme"] = o.scheme;
      j["variant"] = o.variant;
      j["d"] = o.d;
    }
    print_json(j);
    return 0;
  }
  std::cout << o.test << ": " << outcome_name(v.outcome) << " at iteration " << v.iteration
            << "\n";
  return 0;
}

int cmd_iso(const Options &o) {
  const Graph g = load(o.file1);
  const Graph h = load(o.file2);
  const Scheme s = to_scheme(o.scheme);
  const bool gi = are_isomorphic(g, h).isomorphic;
  const bool pi = partition_isomorphic(g, h, s);
  const bool ii = interaction_isomorphic(g, h, s);
  if (o.json) {
    print_json(Json{{"gi", gi}, {"pi", pi}, {"ii", ii}});
    return 0;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "graph isomorphic        " << yn(gi) << "\n"
            << "partition isomorphic    " << yn(pi) << "\n"
            << "interaction isomorphic  " << yn(ii) << "\n";
  return 0;
}

int cmd_suite(const Options &o) {
  PairSuite suite;
  if (!o.file1.empty())
    suite = read_suite_file(o.file1);
  if (o.all) {
    suite.append(named_hard_pairs());
    suite.append(corpus_wl1_equivalent_pairs(6));
    suite.append(random_regular_pairs(500, 1));
  }
  if (suite.pairs.empty() && o.file1.empty())
    throw UsageError("suite needs a suite file, --all, or both");
  suite.validate();

  SuiteOptions opt;
  opt.d = o.d;
  opt.threads = o.threads;
  const HierarchyReport report = run_suite(suite, opt);
  if (o.json) {
    print_json(report_to_json(report));
  } else {
    std::cout << report.rows.size() << " pairs, " << report.violations.size()
              << " violations\n";
    for (const auto &r : report.rows) {
      int distinguished = 0;
      for (const auto &c : r.gpnn)
        distinguished += c.outcome == Outcome::kDistinguished;
      std::cout << "  " << r.name << "  1wl=" << outcome_name(r.wl1)
                << "  2fwl=" << (r.fwl2 ? std::string(outcome_name(*r.fwl2)) : "-")
                << "  gpnn distinguished " << distinguished << "/" << r.gpnn.size() << "\n";
    }
    for (const auto &v : report.violations)
      std::cout << "VIOLATION " << v.check << " " << v.pair << ": " << v.detail << "\n";
  }
  return report.violations.empty() ? 0 : 2;
}

int cmd_gen(const Options &o) {
  const auto kind = parse_graph_kind(o.kind);
  if (!kind)
    throw UsageError("unknown graph kind '" + o.kind + "'");
  std::vector<double> params;
  for (const auto &p : o.params) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(p, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != p.size())
      throw UsageError("parameter '" + p + "' is not a number");
    params.push_back(x);
  }
  const EdgeList el = generate_edge_list(*kind, params, o.seed);
  if (o.json) {
    Json edges = Json::array();
    for (auto [u, v] : el.edges)
      edges.push_back({u, v});
    print_json(Json{{"n", el.n}, {"edges", std::move(edges)}});
    return 0;
  }
  std::cout << serialize_edge_list(el.n, el.edges);
  return 0;
}

int cmd_neural_check(const Options &o) {
  constexpr double kTolerance = 1e-9;
  const Graph g = load(o.file1);
  const Scheme scheme = to_scheme(o.scheme);
  const Variant variant = to_variant(o.variant);
  if (o.f < 1 || o.layers < 1 || o.trials < 1 || o.d < 1)
    throw UsageError("--f, --layers, --trials and --d must be positive");

  NeuralConfig cfg;
  cfg.f = o.f;
  cfg.layers = o.layers;
  cfg.d = o.d;
  cfg.seed = o.seed;
  cfg.k = o.k > 0 ? o.k
                  : std::max<int>(1, static_cast<int>(partition(g, scheme).distinct().size()));
  const Parameters params = init_params(cfg);

  double vertex_dev = 0, graph_dev = 0;
  for (int t = 0; t < o.trials; ++t) {
    const Permutation pi = random_permutation(g.num_vertices(), o.seed + 1000003ULL * (t + 1));
    const Graph h = apply_permutation(g, pi);
    Interner table;
    const Graph *graphs[] = {&g, &h};
    const auto colorings = build_colorings(graphs, scheme, table);
    const NeuralOutput a = forward(g, colorings[0], variant, params);
    const NeuralOutput b = forward(h, colorings[1], variant, params);
    Eigen::MatrixXd pulled(b.vertex.rows(), b.vertex.cols());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      pulled.row(v) = b.vertex.row(pi(v));
    vertex_dev = std::max(vertex_dev, relative_deviation(a.vertex, pulled));
    graph_dev = std::max(graph_dev, relative_deviation(a.graph, b.graph));
  }
  const double max_dev = std::max(vertex_dev, graph_dev);
  const bool pass = max_dev <= kTolerance;
  if (o.json) {
    print_json(Json{{"pass", pass},
                    {"max_deviation", max_dev},
                    {"vertex_deviation", vertex_dev},
                    {"graph_deviation", graph_dev},
                    {"trials", o.trials},
                    {"tolerance", kTolerance}});
  } else {
    std::cout << (pass ? "PASS" : "FAIL") << "  max relative deviation " << max_dev << " over "
              << o.trials << " permutations\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Partition-based graph refinement toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App *c) { c->add_flag("--json", o.json, "Machine-readable output"); };
  auto add_scheme = [&](CLI::App *c) {
    c->add_option("--scheme", o.scheme, "Partitioning scheme")
        ->check(CLI::IsMember(kSchemeNames))
        ->capture_default_str();
  };
  auto add_variant = [&](CLI::App *c) {
    c->add_option("--variant", o.variant, "Interaction variant")
        ->check(CLI::IsMember(kVariantNames))
        ->capture_default_str();
  };

  auto *part = app.add_subcommand("partition", "Per-vertex partition labels");
  part->add_option("file", o.file1, "Edge-list file")->required();
  add_scheme(part);
  add_json(part);

  auto *stats = app.add_subcommand("stats", "Partition statistics");
  stats->add_option("file", o.file1, "Edge-list file")->required();
  add_scheme(stats);
  add_json(stats);

  auto *color = app.add_subcommand("color", "Vertex colors and pair-color histogram");
  color->add_option("file", o.file1, "Edge-list file")->required();
  add_scheme(color);
  add_json(color);

  auto *compare = app.add_subcommand("compare", "Run a distinguishability test on two graphs");
  compare->add_option("file1", o.file1, "First edge-list file")->required();
  compare->add_option("file2", o.file2, "Second edge-list file")->required();
  compare->add_option("--test", o.test, "Test to run")
      ->check(CLI::IsMember({"1wl", "2fwl", "gpnn"}))
      ->capture_default_str();
  add_scheme(compare);
  add_variant(compare);
  compare->add_option("--d", o.d, "Hop radius")->check(CLI::PositiveNumber)->capture_default_str();
  add_json(compare);

  auto *iso = app.add_subcommand("iso", "Graph, partition and interaction isomorphism");
  iso->add_option("file1", o.file1, "First edge-list file")->required();
  iso->add_option("file2", o.file2, "Second edge-list file")->required();
  add_scheme(iso);
  add_json(iso);

  auto *suite = app.add_subcommand("suite", "Run the hierarchy checks over a pair suite");
  suite->add_option("file", o.file1, "Suite JSON file");
  suite->add_flag("--all", o.all, "Append the built-in suites");
  suite->add_option("--d", o.d, "Hop radius")->check(CLI::PositiveNumber)->capture_default_str();
  suite->add_option("--threads", o.threads, "Worker threads (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  add_json(suite);

  auto *gen = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen->add_option("kind", o.kind, "cycle, disjoint_cycles, complete, path, gnp, "
                                  "random_regular, shrikhande or rook4x4")
      ->required();
  gen->add_option("params", o.params, "Kind parameters");
  gen->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  add_json(gen);

  auto *neural = app.add_subcommand("neural-check", "Check equivariance of the numeric model");
  neural->add_option("file", o.file1, "Edge-list file")->required();
  add_scheme(neural);
  add_variant(neural);
  neural->add_option("--f", o.f, "Hidden width")->capture_default_str();
  neural->add_option("--layers", o.layers, "Layer count")->capture_default_str();
  neural->add_option("--k", o.k, "Partition slots (0 = number of partitions)");
  neural->add_option("--d", o.d, "Hop radius")->capture_default_str();
  neural->add_option("--trials", o.trials, "Random permutations to test")->capture_default_str();
  neural->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  add_json(neural);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*part) return cmd_partition(o);
    if (*stats) return cmd_stats(o);
    if (*color) return cmd_color(o);
    if (*compare) return cmd_compare(o);
    if (*iso) return cmd_iso(o);
    if (*suite) return cmd_suite(o);
    if (*gen) return cmd_gen(o);
    if (*neural) return cmd_neural_check(o);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
