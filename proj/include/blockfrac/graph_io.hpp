#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockfrac/graph.hpp"

namespace blockfrac {

struct GraphData {
    Graph graph;
    std::vector<VertexSet> blocks;  // empty when the file carries none
    nlohmann::json meta;            // null when absent
};

// Edge-list text: one "u v" pair per line, 0-based; optional "p <n> <m>"
// header; blank lines and lines starting with '#' or 'c' are skipped.
// Without a header, n is one past the highest vertex index.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// JSON: {"n": int, "edges": [[u,v],...]} plus optional "blocks" (a partition
// of 0..n-1 ordered by nonincreasing size) and optional "meta". JSON is the
// canonical format since it carries block structure.
GraphData read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g, const std::vector<VertexSet>& blocks = {},
                      const nlohmann::json& meta = nlohmann::json());

// Dispatches on extension: ".json" or anything else as edge-list text.
GraphData load_graph_file(const std::string& path);
void save_graph_json_file(const std::string& path, const Graph& g,
                          const std::vector<VertexSet>& blocks = {},
                          const nlohmann::json& meta = nlohmann::json());

nlohmann::json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j);

}  // namespace blockfrac
