#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "blockfrac/block.hpp"
#include "blockfrac/graph.hpp"
#include "blockfrac/rational.hpp"

// Brute-force reference implementations, kept deliberately independent of the
// library's solvers: everything here enumerates.
namespace oracles {

using blockfrac::BlockGraph;
using blockfrac::Edge;
using blockfrac::Graph;
using blockfrac::Rat;
using blockfrac::VertexSet;

// alpha by direct subset enumeration over an explicit edge list.
inline int alpha_of_edges(int n, const std::vector<Edge>& edges) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : edges)
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

// max |E(S)| / |S| over nonempty subsets; n <= 14 or so.
inline Rat densest_bruteforce(const Graph& g, const VertexSet& region) {
    Rat best = 0;
    const int n = int(region.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        int edges = 0;
        for (int a = 0; a < n; ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = a + 1; b < n; ++b)
                if ((mask >> b & 1) && g.has_edge(region[a], region[b])) ++edges;
        }
        Rat d = blockfrac::make_rat(edges, std::popcount(mask));
        if (d > best) best = d;
    }
    return best;
}

// Does any subgraph confined to `window` have at most s vertices and at
// least 3s edges for an admissible s? Enumerates vertex subsets; induced
// edge counts dominate every sub-selection of edges.
inline bool window_violation_oracle(const Graph& g, const VertexSet& window, std::uint64_t s_min,
                                    std::uint64_t s_max) {
    const int n = int(window.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint64_t size = std::uint64_t(std::popcount(mask));
        if (size > s_max) continue;
        std::uint64_t s = std::max(size, s_min);
        if (s > s_max) continue;
        std::uint64_t edges = 0;
        for (int a = 0; a < n; ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = a + 1; b < n; ++b)
                if ((mask >> b & 1) && g.has_edge(window[a], window[b])) ++edges;
        }
        if (edges >= 3 * s) return true;
    }
    return false;
}

// Does the prefix hold a nonempty subgraph within the vertex cap whose
// density reaches 3/2?
inline bool prefix_violation_oracle(const Graph& g, const VertexSet& prefix,
                                    std::uint64_t size_cap) {
    const int n = int(prefix.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint64_t size = std::uint64_t(std::popcount(mask));
        if (size > size_cap) continue;
        std::uint64_t edges = 0;
        for (int a = 0; a < n; ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = a + 1; b < n; ++b)
                if ((mask >> b & 1) && g.has_edge(prefix[a], prefix[b])) ++edges;
        }
        if (2 * edges >= 3 * size) return true;
    }
    return false;
}

// Literal Hall ratio over every subgraph: all vertex subsets and, for each,
// all edge subsets. Tiny n only.
inline Rat hall_all_subgraphs(const Graph& g) {
    Rat best = 0;
    const int n = g.vertex_count();
    for (std::uint32_t vmask = 1; vmask < (std::uint32_t(1) << n); ++vmask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (vmask >> v & 1) verts.push_back(v);
        std::vector<Edge> inside;
        for (auto [u, v] : g.edges())
            if ((vmask >> u & 1) && (vmask >> v & 1))
                inside.emplace_back(int(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin()),
                                    int(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
        const int m = int(inside.size());
        for (std::uint32_t emask = 0; emask < (std::uint32_t(1) << m); ++emask) {
            std::vector<Edge> chosen;
            for (int e = 0; e < m; ++e)
                if (emask >> e & 1) chosen.push_back(inside[e]);
            Rat ratio = blockfrac::make_rat(int(verts.size()),
                                            alpha_of_edges(int(verts.size()), chosen));
            if (ratio > best) best = ratio;
        }
    }
    return best;
}

}  // namespace oracles
