#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockfrac/graph.hpp"

namespace blockfrac {

// Ordered nonincreasing block sizes plus the parameters they came from.
struct BlockProfile {
    enum class Kind { Exp, Tower, Param, Custom };

    Kind kind = Kind::Custom;
    std::vector<std::uint64_t> sizes;  // |B_1| >= ... >= |B_k| >= 1

    // provenance; n is 0 for custom profiles
    double n = 0;
    double q = 0;
    double eps = 0;

    int block_count() const { return int(sizes.size()); }
    std::uint64_t total_vertices() const;

    // k >= 3 and |B_k| >= k, the preconditions of the chi_f lower-bound
    // machinery for sampled graphs.
    bool meets_lower_bound_precondition() const;

    std::string kind_name() const;
    nlohmann::json to_json() const;
    static BlockProfile from_json(const nlohmann::json& j);
};

// k = floor(log_3(n)/2), |B_i| = ceil(n/3^i). Requires n >= 9.
BlockProfile exp_profile(std::uint64_t n);

// |B_i| = ceil(n^(1 - q^i * eps)). Requires q >= 2, eps > 0, k >= 1 and all
// exponents positive. This is the reachable-n stand-in for the tower regime.
BlockProfile param_profile(double n, double q, double eps, int k);

// param_profile with q = 4, eps = 1/sqrt(log n), k = floor(log_4(log n)/3).
// Needs log(n) >= 64 for k >= 1, so n is taken as a floating-point scale.
BlockProfile tower_profile(double n);

BlockProfile custom_profile(std::vector<std::uint64_t> sizes);

// A graph together with an ordered partition into independent blocks.
struct BlockGraph {
    Graph graph;
    std::vector<VertexSet> blocks;
    std::vector<int> block_of;  // vertex -> 0-based block index

    BlockGraph() = default;
    BlockGraph(Graph g, std::vector<VertexSet> bs);  // validates all invariants

    int block_count() const { return int(blocks.size()); }
    std::vector<std::uint64_t> block_sizes() const;

    // Union of blocks with 0-based index in [from, to); indices outside the
    // valid range contribute nothing.
    VertexSet block_range_union(int from, int to) const;
};

struct SampleOptions {
    std::uint64_t max_vertices = 50000;
};

// Vertices are laid out block by block: B_1 = [0, |B_1|), B_2 next, and so
// on. For each block pair (j, i), j < i in lexicographic order, then each
// (v in B_j, u in B_i) in index order, one 64-bit value is drawn and the
// edge is present iff it is below floor(2^64 / |B_j|). Bit-exact
// reproducible from (profile, seed).
BlockGraph sample(const BlockProfile& profile, std::uint64_t seed,
                  const SampleOptions& opts = {});

// Sum over block pairs j < i of |B_i| * |B_j| * (1/|B_j|) = sum_i (i-1)|B_i|.
Rat expected_edge_count(const BlockProfile& profile);

}  // namespace blockfrac
