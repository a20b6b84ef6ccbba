#pragma once

#include <cstdint>
#include <vector>

namespace blockfrac {

// Dinic's algorithm with 64-bit integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int num_nodes);

    void add_edge(int from, int to, std::int64_t capacity);
    std::int64_t run(int source, int sink);

    // After run(): nodes reachable from the source in the residual graph.
    std::vector<char> min_cut_source_side(int source) const;

private:
    struct Arc {
        int to;
        std::int64_t cap;
        int rev;
    };

    bool bfs(int s, int t);
    std::int64_t dfs(int v, int t, std::int64_t pushed);

    int n_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace blockfrac
