#pragma once

#include <cstdint>
#include <vector>

#include "blockfrac/graph.hpp"

namespace blockfrac {

struct MwisResult {
    VertexSet set;
    Rat value;
};

struct MwisOptions {
    std::uint64_t node_cap = 10'000'000;  // branch-and-bound nodes per call
};

// Exact maximum-weight independent set. Weights must be nonnegative.
// Connected components are solved separately; degree-0/1 reductions fold
// away tree-like parts; the rest is branch and bound on bitset adjacency
// with an exact clique-cover upper bound. Deterministic.
MwisResult mwis(const Graph& g, const Weighting& w, const MwisOptions& opts = {});

// Unit-weight special case.
int alpha(const Graph& g, const MwisOptions& opts = {});

// Exhaustive reference for property tests; |V| <= 20.
MwisResult mwis_bruteforce(const Graph& g, const Weighting& w);

// alpha(g[S]) for every subset S of a graph with |V| <= cap (default 26,
// one byte per subset).
class AlphaTable {
public:
    explicit AlphaTable(const Graph& g, int cap = 26);

    int alpha_of(std::uint32_t mask) const { return table_[mask]; }
    int vertex_count() const { return n_; }

private:
    int n_;
    std::vector<std::uint8_t> table_;
};

}  // namespace blockfrac
