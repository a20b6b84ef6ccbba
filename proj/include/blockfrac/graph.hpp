#pragma once

#include <utility>
#include <vector>

#include "blockfrac/bitset.hpp"
#include "blockfrac/rational.hpp"

namespace blockfrac {

using Edge = std::pair<int, int>;  // normalized to first < second

// Sorted ascending, no duplicates. Helpers below enforce the convention.
using VertexSet = std::vector<int>;

VertexSet normalized_vertex_set(VertexSet s);

// Immutable simple undirected graph on dense indices 0..n-1.
// Adjacency is kept both as per-vertex bit rows (fast set queries) and as a
// sorted edge list (iteration, serialization).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return deg_[v]; }
    int max_degree() const;
    const Bitset& row(int v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    VertexSet vertices() const;
    Bitset full_mask() const;

    std::vector<VertexSet> connected_components() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
};

// A subgraph of some host graph, as explicit vertex and edge member lists.
struct Subgraph {
    VertexSet vertices;
    std::vector<Edge> edges;

    static Subgraph induced(const Graph& g, const VertexSet& s);
    static Subgraph whole(const Graph& g);

    int vertex_count() const { return int(vertices.size()); }
    int edge_count() const { return int(edges.size()); }

    // input_error unless vertices/edges are members of g and edge ends lie
    // inside `vertices`.
    void validate_against(const Graph& g) const;

    std::vector<int> degrees_on(const Graph& g) const;  // deg in h, indexed by host vertex
    VertexSet isolated_vertices(const Graph& g) const;
    Subgraph without_vertices(const VertexSet& drop) const;
    Subgraph restricted_to(const VertexSet& keep) const;  // vertices ∩ keep, edges inside
};

struct InducedResult {
    Graph graph;
    std::vector<int> index_map;  // new index -> original vertex
};

InducedResult induced_subgraph(const Graph& g, const VertexSet& s);

// Nonnegative per-vertex rational weights over a host graph's vertex range.
class Weighting {
public:
    Weighting() = default;
    explicit Weighting(int n) : w_(n) {}

    int size() const { return int(w_.size()); }
    const Rat& operator[](int v) const { return w_[v]; }
    Rat& operator[](int v) { return w_[v]; }

    Rat total() const;
    bool all_nonnegative() const;
    bool all_zero() const;

private:
    std::vector<Rat> w_;
};

Weighting degree_weight(const Graph& g, const Subgraph& h);

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<int> ordering;  // elimination order, first removed first
};

// Min-degree elimination; ties broken by lowest index.
DegeneracyResult degeneracy(const Graph& g);

// Colors vertices in reverse of `ordering`, smallest free color first.
// Uses at most (back-degree witnessed by the ordering) + 1 colors.
std::vector<int> greedy_coloring_from_degeneracy(const Graph& g, const std::vector<int>& ordering);

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);
int color_count(const std::vector<int>& coloring);

// Repeated minimum-degree vertex selection with closed-neighborhood removal;
// ties by lowest index. Output size is at least ceil(n^2 / (2m + n)).
VertexSet caro_wei_greedy(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace blockfrac
