#pragma once

#include <vector>

#include "blockfrac/graph.hpp"

namespace fixtures {

using blockfrac::Edge;
using blockfrac::Graph;

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

inline Graph edgeless(int n) { return Graph(n, {}); }

// Center 0, leaves 1..leaves.
inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

// Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(e));
}

// Mycielskian: original 0..n-1, shadows n..2n-1, apex 2n.
inline Graph mycielskian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> e = g.edges();
    for (auto [u, v] : g.edges()) {
        e.emplace_back(u, n + v);
        e.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, std::move(e));
}

inline Graph groetzsch() { return mycielskian(cycle(5)); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(a.vertex_count() + u, a.vertex_count() + v);
    return Graph(a.vertex_count() + b.vertex_count(), std::move(e));
}

}  // namespace fixtures
