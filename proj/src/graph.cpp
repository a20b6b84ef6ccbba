#include "blockfrac/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "blockfrac/errors.hpp"

namespace blockfrac {

VertexSet normalized_vertex_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw input_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw input_error("parallel edge in edge list");
    edges_ = std::move(edges);
    adj_.assign(n_, Bitset(n_));
    deg_.assign(n_, 0);
    for (auto [u, v] : edges_) {
        adj_[u].set(v);
        adj_[v].set(u);
        ++deg_[u];
        ++deg_[v];
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
    return d;
}

VertexSet Graph::vertices() const {
    VertexSet all(n_);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

Bitset Graph::full_mask() const {
    Bitset b(n_);
    for (int v = 0; v < n_; ++v) b.set(v);
    return b;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            adj_[v].for_each([&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Subgraph Subgraph::induced(const Graph& g, const VertexSet& s) {
    Subgraph h;
    h.vertices = normalized_vertex_set(s);
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : h.vertices) {
        if (v < 0 || v >= g.vertex_count()) throw input_error("subgraph vertex out of range");
        in[v] = 1;
    }
    for (auto e : g.edges())
        if (in[e.first] && in[e.second]) h.edges.push_back(e);
    return h;
}

Subgraph Subgraph::whole(const Graph& g) {
    Subgraph h;
    h.vertices = g.vertices();
    h.edges = g.edges();
    return h;
}

void Subgraph::validate_against(const Graph& g) const {
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw input_error("subgraph vertex " + std::to_string(v) + " not in host graph");
    for (auto [u, v] : edges) {
        if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
            !std::binary_search(vertices.begin(), vertices.end(), v))
            throw input_error("subgraph edge endpoint outside its vertex set");
        if (u == v || u < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
            throw input_error("subgraph edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") absent from host graph");
    }
}

std::vector<int> Subgraph::degrees_on(const Graph& g) const {
    std::vector<int> deg(g.vertex_count(), 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

VertexSet Subgraph::isolated_vertices(const Graph& g) const {
    auto deg = degrees_on(g);
    VertexSet out;
    for (int v : vertices)
        if (deg[v] == 0) out.push_back(v);
    return out;
}

Subgraph Subgraph::without_vertices(const VertexSet& drop) const {
    Subgraph h;
    std::set_difference(vertices.begin(), vertices.end(), drop.begin(), drop.end(),
                        std::back_inserter(h.vertices));
    for (auto e : edges)
        if (std::binary_search(h.vertices.begin(), h.vertices.end(), e.first) &&
            std::binary_search(h.vertices.begin(), h.vertices.end(), e.second))
            h.edges.push_back(e);
    return h;
}

Subgraph Subgraph::restricted_to(const VertexSet& keep) const {
    Subgraph h;
    std::set_intersection(vertices.begin(), vertices.end(), keep.begin(), keep.end(),
                          std::back_inserter(h.vertices));
    for (auto e : edges)
        if (std::binary_search(h.vertices.begin(), h.vertices.end(), e.first) &&
            std::binary_search(h.vertices.begin(), h.vertices.end(), e.second))
            h.edges.push_back(e);
    return h;
}

InducedResult induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet keep = normalized_vertex_set(s);
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count())
            throw input_error("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        pos[v] = int(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    InducedResult r;
    r.graph = Graph(int(keep.size()), std::move(edges));
    r.index_map = keep;
    return r;
}

Rat Weighting::total() const {
    Rat t = 0;
    for (const auto& x : w_) t += x;
    return t;
}

bool Weighting::all_nonnegative() const {
    for (const auto& x : w_)
        if (x < 0) return false;
    return true;
}

bool Weighting::all_zero() const {
    for (const auto& x : w_)
        if (x != 0) return false;
    return true;
}

Weighting degree_weight(const Graph& g, const Subgraph& h) {
    h.validate_against(g);
    Weighting w(g.vertex_count());
    for (auto [u, v] : h.edges) {
        w[u] += 1;
        w[v] += 1;
    }
    return w;
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyResult r;
    r.ordering.reserve(n);
    std::vector<int> deg(n);
    // lazy min-heap over (degree, vertex); stale entries are skipped on pop
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    Bitset alive = g.full_mask();
    std::vector<char> removed(n, 0);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v]) continue;
        r.degeneracy = std::max(r.degeneracy, d);
        r.ordering.push_back(v);
        removed[v] = 1;
        alive.reset(v);
        Bitset nb = g.row(v);
        nb &= alive;
        nb.for_each([&](int u) {
            --deg[u];
            heap.emplace(deg[u], u);
        });
    }
    return r;
}

std::vector<int> greedy_coloring_from_degeneracy(const Graph& g, const std::vector<int>& ordering) {
    const int n = g.vertex_count();
    if (int(ordering.size()) != n) throw input_error("ordering is not a permutation of V");
    std::vector<char> seen(n, 0);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[v]) throw input_error("ordering is not a permutation of V");
        seen[v] = 1;
    }
    std::vector<int> color(n, -1);
    std::vector<char> used;
    for (int idx = n - 1; idx >= 0; --idx) {
        int v = ordering[idx];
        used.assign(n + 1, 0);
        g.row(v).for_each([&](int u) {
            if (color[u] >= 0) used[color[u]] = 1;
        });
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
    if (int(coloring.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

int color_count(const std::vector<int>& coloring) {
    int c = 0;
    for (int x : coloring) c = std::max(c, x + 1);
    return c;
}

VertexSet caro_wei_greedy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    Bitset alive = g.full_mask();
    std::vector<char> gone(n, 0);
    VertexSet out;
    int remaining = n;
    while (remaining > 0) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        out.push_back(best);
        Bitset close = g.row(best);
        close &= alive;
        close.set(best);
        close.for_each([&](int u) {
            gone[u] = 1;
            alive.reset(u);
            --remaining;
        });
        close.for_each([&](int u) {
            Bitset nb = g.row(u);
            nb &= alive;
            nb.for_each([&](int w) { --deg[w]; });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (g.has_edge(s[a], s[b])) return false;
    return true;
}

}  // namespace blockfrac
