#include <doctest.h>

#include <sstream>

#include "blockfrac/errors.hpp"
#include "blockfrac/graph_io.hpp"
#include "support/fixtures.hpp"

using namespace blockfrac;

TEST_CASE("edge list: pairs make a path") {
    std::istringstream in("0 1\n1 2\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("edge list: header, comments, round trip") {
    std::istringstream in("c comment\np 5 2\n# another\n0 1\n\n3 4\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2);

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream again(out.str());
    Graph g2 = read_edge_list(again);
    std::ostringstream out2;
    write_edge_list(out2, g2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("edge list: parse errors carry the line") {
    auto expect_error = [](const char* text, const char* needle) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
            FAIL_CHECK("expected parse_error for: " << text);
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("0 1\n2\n", "line 2");
    expect_error("p 2 1\n0 5\n", "exceeds declared");
    expect_error("p 3 2\n0 1\n", "m=2");
    expect_error("0 1 9\n", "trailing");
    expect_error("x 1\n", "bad vertex");
}

TEST_CASE("json graph: round trip with blocks and meta") {
    Graph g = fixtures::complete_bipartite(2, 2);
    std::vector<VertexSet> blocks = {{0, 1}, {2, 3}};
    nlohmann::json meta = {{"seed", 7}};
    std::ostringstream out;
    write_graph_json(out, g, blocks, meta);

    std::istringstream in(out.str());
    GraphData data = read_graph_json(in);
    CHECK(data.graph.edges() == g.edges());
    CHECK(data.blocks == blocks);
    CHECK(data.meta["seed"] == 7);

    std::ostringstream out2;
    write_graph_json(out2, data.graph, data.blocks, data.meta);
    CHECK(out.str() == out2.str());
}

TEST_CASE("json graph: validation") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_graph_json(in);
    };
    CHECK_THROWS_AS(parse("{\"n\": 2}"), parse_error);
    CHECK_THROWS_AS(parse("{\"n\": 2, \"edges\": [[0,2]]}"), parse_error);
    CHECK_THROWS_AS(parse("{\"n\": 2, \"edges\": [[0,1],[1,0]]}"), parse_error);
    // blocks must partition 0..n-1
    CHECK_THROWS_AS(parse("{\"n\": 3, \"edges\": [], \"blocks\": [[0],[1]]}"), parse_error);
    CHECK_THROWS_AS(parse("{\"n\": 3, \"edges\": [], \"blocks\": [[0,1],[1,2]]}"), parse_error);
    // sizes must be nonincreasing
    CHECK_THROWS_AS(parse("{\"n\": 3, \"edges\": [], \"blocks\": [[0],[1,2]]}"), parse_error);
    CHECK(parse("{\"n\": 3, \"edges\": [], \"blocks\": [[0,1],[2]]}").blocks.size() == 2);
}
