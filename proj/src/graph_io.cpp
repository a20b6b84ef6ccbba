#include "blockfrac/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "blockfrac/errors.hpp"

namespace blockfrac {

using nlohmann::json;

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long declared_n = -1, declared_m = -1;
    std::vector<Edge> edges;
    int max_index = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string locus = "edge list line " + std::to_string(lineno);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "#" || first == "c" || first[0] == '#') continue;
        if (first == "p") {
            if (declared_n >= 0) throw parse_error(locus + ": duplicate header");
            if (!(ls >> declared_n >> declared_m) || declared_n < 0 || declared_m < 0)
                throw parse_error(locus + ": bad header, expected 'p <n> <m>'");
            continue;
        }
        long u, v;
        try {
            u = std::stol(first);
        } catch (const std::exception&) {
            throw parse_error(locus + ": bad vertex '" + first + "'");
        }
        if (!(ls >> v)) throw parse_error(locus + ": missing second endpoint");
        std::string trailing;
        if (ls >> trailing) throw parse_error(locus + ": trailing token '" + trailing + "'");
        if (u < 0 || v < 0) throw parse_error(locus + ": negative vertex index");
        edges.emplace_back(int(u), int(v));
        max_index = std::max(max_index, int(std::max(u, v)));
    }
    int n = declared_n >= 0 ? int(declared_n) : max_index + 1;
    if (max_index >= n) throw parse_error("edge list: vertex " + std::to_string(max_index) +
                                          " exceeds declared n=" + std::to_string(n));
    if (declared_m >= 0 && declared_m != long(edges.size()))
        throw parse_error("edge list: header declares m=" + std::to_string(declared_m) + " but " +
                          std::to_string(edges.size()) + " edges found");
    try {
        return Graph(n, std::move(edges));
    } catch (const input_error& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

json vertex_set_to_json(const VertexSet& s) { return json(s); }

VertexSet vertex_set_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("vertex set: expected array");
    VertexSet s;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw parse_error("vertex set: non-integer member");
        s.push_back(x.get<int>());
    }
    return s;
}

GraphData read_graph_json(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph json: need object with 'n' and 'edges'");
    if (!j["n"].is_number_integer()) throw parse_error("graph json: field 'n' must be an integer");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    if (!j["edges"].is_array()) throw parse_error("graph json: field 'edges' must be an array");
    int idx = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw parse_error("graph json: edges[" + std::to_string(idx) + "] must be [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        ++idx;
    }
    GraphData data;
    try {
        data.graph = Graph(n, std::move(edges));
    } catch (const input_error& e) {
        throw parse_error(std::string("graph json: ") + e.what());
    }
    if (j.contains("blocks")) {
        if (!j["blocks"].is_array()) throw parse_error("graph json: field 'blocks' must be an array");
        std::vector<char> seen(n, 0);
        std::size_t prev_size = std::size_t(-1);
        int bi = 0;
        for (const auto& b : j["blocks"]) {
            VertexSet block = normalized_vertex_set(vertex_set_from_json(b));
            std::string locus = "graph json: blocks[" + std::to_string(bi) + "]";
            if (block.size() != b.size()) throw parse_error(locus + ": duplicate vertex");
            for (int v : block) {
                if (v < 0 || v >= n) throw parse_error(locus + ": vertex out of range");
                if (seen[v]) throw parse_error(locus + ": vertex " + std::to_string(v) +
                                               " appears in more than one block");
                seen[v] = 1;
            }
            if (block.size() > prev_size) throw parse_error(locus + ": block sizes must be nonincreasing");
            prev_size = block.size();
            data.blocks.push_back(std::move(block));
            ++bi;
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v])
                throw parse_error("graph json: blocks do not cover vertex " + std::to_string(v));
    }
    if (j.contains("meta")) data.meta = j["meta"];
    return data;
}

void write_graph_json(std::ostream& out, const Graph& g, const std::vector<VertexSet>& blocks,
                      const json& meta) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (!blocks.empty()) {
        json bs = json::array();
        for (const auto& b : blocks) bs.push_back(json(b));
        j["blocks"] = std::move(bs);
    }
    if (!meta.is_null()) j["meta"] = meta;
    out << j.dump() << "\n";
}

GraphData load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_graph_json(in);
    GraphData data;
    data.graph = read_edge_list(in);
    return data;
}

void save_graph_json_file(const std::string& path, const Graph& g,
                          const std::vector<VertexSet>& blocks, const json& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    write_graph_json(out, g, blocks, meta);
}

}  // namespace blockfrac
