#pragma once

#include <cstdint>

#include <json.hpp>

#include "blockfrac/graph.hpp"
#include "blockfrac/mwis.hpp"

namespace blockfrac {

struct HallRatioResult {
    Rat value;
    VertexSet witness;  // maximizer of |S| / alpha(g[S]) in exact mode
    bool exact = true;
};

struct HallOptions {
    int dp_cap = 26;
    MwisOptions mwis;
};

// max over nonempty S of |S|/alpha(g[S]) via the subset table. The maximum
// over induced subgraphs equals the maximum over all subgraphs, since edge
// deletion can only raise the denominator. Witness tie-break: smallest |S|,
// then lexicographically smallest vertex sequence.
HallRatioResult hall_ratio_exact(const Graph& g, const HallOptions& opts = {});

// Local search over vertex subsets, each candidate scored by one exact
// alpha computation; always a true lower bound. Budget counts MWIS calls.
HallRatioResult hall_ratio_lower_bound(const Graph& g, int budget = 200,
                                       const HallOptions& opts = {});

// max over {0,1} weightings of total/alpha_w — an independent route to the
// same number as hall_ratio_exact, used as a cross-check oracle.
Rat hall_ratio_via_01_weights(const Graph& g, const HallOptions& opts = {});

nlohmann::json hall_to_json(const HallRatioResult& r);

}  // namespace blockfrac
