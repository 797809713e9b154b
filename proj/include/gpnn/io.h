//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_IO_H_
#define GPNN_IO_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gpnn/graph.h"
#include "gpnn/harness.h"
#include "gpnn/partition.h"
#include "gpnn/verdict.h"

namespace gpnn {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string &what);
  // 0 means "end of file".
  int line() const { return line_; }

private:
  int line_;
};

// Edge-list text: '#' starts a comment line, blank lines are ignored, the
// first remaining line is "n m", followed by exactly m lines "u v" with
// 0-based endpoints.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string &path);

std::string serialize_edge_list(Vertex n, std::span<const Edge> edges);
std::string serialize_edge_list(const Graph &g);

// {"pairs": [{"name": s, "g1": {"n": int, "edges": [[u, v], ...]}, "g2": {...}}]}
PairSuite parse_suite(std::string_view text);
PairSuite read_suite_file(const std::string &path);
Json graph_to_json(const Graph &g);

Json verdict_to_json(const Verdict &v);
Json report_to_json(const HierarchyReport &report);
Json stats_to_json(const PartitionStats &stats);
Json index_to_json(const PartitionIndex &index);

}  // namespace gpnn

#endif  // GPNN_IO_H_
