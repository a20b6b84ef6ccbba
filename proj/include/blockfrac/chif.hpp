#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blockfrac/block.hpp"
#include "blockfrac/graph.hpp"
#include "blockfrac/mwis.hpp"

namespace blockfrac {

// A weighted family of independent sets covering every vertex with total
// weight at least one; its total weight upper-bounds chi_f.
struct FractionalColoring {
    std::vector<std::pair<VertexSet, Rat>> columns;

    Rat total_weight() const;
    // Every column independent, weights positive, every vertex covered >= 1.
    void verify_feasible(const Graph& g) const;
};

// Vertex weights with alpha_y(g) <= 1; their sum lower-bounds chi_f.
struct DualWitness {
    Weighting y;
};

struct ChiFResult {
    Rat value;
    FractionalColoring primal;
    DualWitness dual;
    std::uint64_t pricing_rounds = 0;
};

struct ChiFOptions {
    int enumerate_cap = 15;
    std::uint64_t iteration_cap = 0;  // 0: 10 * 2^n, saturated
    MwisOptions mwis;
};

// Optimum of the covering LP over every independent set, solved exactly;
// |V| <= enumerate_cap. Self-certifying: primal and dual witnesses are
// verified directly against the graph, not trusted from the solver.
ChiFResult chi_f_enumerate(const Graph& g, const ChiFOptions& opts = {});

// Column generation with exact MWIS pricing, solved per connected component
// and merged. Terminates when pricing proves the duals feasible, so the
// value is exactly chi_f.
ChiFResult chi_f_colgen(const Graph& g, const ChiFOptions& opts = {});

// (sum of w) / alpha_w(g); always a chi_f lower bound. w must be nonzero.
Rat weight_ratio_lower_bound(const Graph& g, const Weighting& w, const MwisOptions& opts = {});

// Weights 1/|B_i| on block i; total is exactly the block count.
Weighting block_weighting(const BlockGraph& bg);
Rat block_weight_lower_bound(const BlockGraph& bg, const MwisOptions& opts = {});

nlohmann::json chif_to_json(const ChiFResult& r);

}  // namespace blockfrac
