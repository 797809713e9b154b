//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace gpnn {

ParseError::ParseError(int line, const std::string &what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : "end of file: " + what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Exactly two whitespace-separated integers.
std::optional<std::pair<std::int64_t, std::int64_t>> two_ints(std::string_view s) {
  std::int64_t vals[2];
  const char *p = s.data();
  const char *end = s.data() + s.size();
  for (auto &val : vals) {
    while (p < end && (*p == ' ' || *p == '\t'))
      ++p;
    auto [next, ec] = std::from_chars(p, end, val);
    if (ec != std::errc() || next == p)
      return std::nullopt;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t'))
    ++p;
  if (p != end)
    return std::nullopt;
  return std::pair{vals[0], vals[1]};
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<std::int64_t, std::int64_t>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;

    const auto ints = two_ints(line);
    if (!header) {
      if (!ints || ints->first < 0 || ints->second < 0)
        throw ParseError(line_no, "malformed header, expected \"n m\"");
      if (ints->first > std::numeric_limits<Vertex>::max())
        throw ParseError(line_no, "vertex count too large");
      header = ints;
      continue;
    }
    if (!ints)
      throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    if (static_cast<std::int64_t>(edges.size()) == header->second)
      throw ParseError(line_no, "count mismatch: more than " + std::to_string(header->second) +
                                    " edges");
    const auto [u, v] = *ints;
    if (u < 0 || v < 0 || u >= header->first || v >= header->first)
      throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(header->first) + ")");
    if (u == v)
      throw ParseError(line_no, "self-loop");
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!header)
    throw ParseError(0, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != header->second)
    throw ParseError(0, "count mismatch: declared " + std::to_string(header->second) +
                            " edges, found " + std::to_string(edges.size()));
  return Graph::from_edge_list(static_cast<Vertex>(header->first), edges);
}

Graph read_edge_list_file(const std::string &path) { return parse_edge_list(slurp(path)); }

std::string serialize_edge_list(Vertex n, std::span<const Edge> edges) {
  std::string out = std::to_string(n) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string serialize_edge_list(const Graph &g) {
  const auto edges = g.edges();
  return serialize_edge_list(g.num_vertices(), edges);
}

namespace {

Graph graph_from_json(const Json &j, const std::string &where) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument(where + ": expected {\"n\": int, \"edges\": [...]}");
  const auto n = j.at("n").get<std::int64_t>();
  if (n < 0 || n > std::numeric_limits<Vertex>::max())
    throw std::invalid_argument(where + ": bad vertex count");
  std::vector<Edge> edges;
  for (const auto &e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument(where + ": edges must be [u, v] pairs");
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument(where + ": endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edge_list(static_cast<Vertex>(n), edges);
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

}  // namespace

PairSuite parse_suite(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw std::invalid_argument(std::string("suite file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc.at("pairs").is_array())
    throw std::invalid_argument("suite file needs a \"pairs\" array");
  PairSuite suite;
  for (const auto &p : doc.at("pairs")) {
    if (!p.is_object() || !p.contains("name") || !p.at("name").is_string())
      throw std::invalid_argument("every pair needs a string \"name\"");
    const std::string name = p.at("name").get<std::string>();
    if (!p.contains("g1") || !p.contains("g2"))
      throw std::invalid_argument(name + ": needs \"g1\" and \"g2\"");
    suite.add(name, graph_from_json(p.at("g1"), name + ".g1"),
              graph_from_json(p.at("g2"), name + ".g2"),
              p.contains("note") ? p.at("note").get<std::string>() : std::string());
  }
  suite.validate();
  return suite;
}

PairSuite read_suite_file(const std::string &path) { return parse_suite(slurp(path)); }

Json graph_to_json(const Graph &g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u, v});
  return Json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Json verdict_to_json(const Verdict &v) {
  auto hist = [](const Histogram &h) {
    Json out = Json::array();
    for (auto [color, count] : h)
      out.push_back({color, count});
    return out;
  };
  return Json{{"outcome", outcome_name(v.outcome)},
              {"iteration", v.iteration},
              {"histogram_1", hist(v.first)},
              {"histogram_2", hist(v.second)}};
}

Json report_to_json(const HierarchyReport &report) {
  Json schemes = Json::array(), variants = Json::array();
  for (Scheme s : report.schemes)
    schemes.push_back(scheme_name(s));
  for (Variant v : report.variants)
    variants.push_back(variant_name(v));

  Json rows = Json::array();
  for (const auto &r : report.rows) {
    Json lambda = Json::object(), gpnn = Json::object();
    for (const auto &[s, eq] : r.lambda_equivalent)
      lambda[std::string(scheme_name(s))] = eq;
    for (const auto &c : r.gpnn)
      gpnn[std::string(scheme_name(c.scheme)) + "/" + std::string(variant_name(c.variant))] =
          outcome_name(c.outcome);
    rows.push_back(Json{{"name", r.name},
                        {"n", r.n},
                        {"1wl", outcome_name(r.wl1)},
                        {"2fwl", r.fwl2 ? Json(outcome_name(*r.fwl2)) : Json(nullptr)},
                        {"lambda_equivalent", std::move(lambda)},
                        {"gpnn", std::move(gpnn)}});
  }
  Json violations = Json::array();
  for (const auto &v : report.violations)
    violations.push_back(Json{{"check", v.check}, {"pair", v.pair}, {"detail", v.detail}});

  return Json{{"schemes", std::move(schemes)},
              {"variants", std::move(variants)},
              {"d", report.d},
              {"pairs", std::move(rows)},
              {"violations", std::move(violations)},
              {"summary", Json{{"pairs", report.rows.size()},
                               {"violations", report.violations.size()}}}};
}

Json index_to_json(const PartitionIndex &index) { return Json::array({index.major, index.minor}); }

Json stats_to_json(const PartitionStats &stats) {
  Json dist = Json::array();
  for (const auto &[index, pct] : stats.vertex_distribution)
    dist.push_back(Json{{"index", index_to_json(index)}, {"percent", pct}});
  return Json{{"partitions", stats.num_partitions},
              {"same_partition_edges", stats.same_partition_edges},
              {"cross_partition_edges", stats.cross_partition_edges},
              {"vertex_distribution", std::move(dist)}};
}

}  // namespace gpnn
