#include "blockfrac/hall.hpp"

#include <algorithm>
#include <string>

#include "blockfrac/certificates.hpp"
#include "blockfrac/errors.hpp"

namespace blockfrac {

namespace {

VertexSet mask_to_set(std::uint32_t mask, int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
    return s;
}

// true when a beats b under: bigger ratio, then smaller size, then
// lexicographically smaller vertex sequence
bool better_witness(long size_a, long alpha_a, const VertexSet& a, long size_b, long alpha_b,
                    const VertexSet& b) {
    long lhs = size_a * alpha_b, rhs = size_b * alpha_a;
    if (lhs != rhs) return lhs > rhs;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

HallRatioResult hall_ratio_exact(const Graph& g, const HallOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("hall_ratio_exact: empty graph");
    if (n > opts.dp_cap)
        throw resource_error("hall_ratio_exact: " + std::to_string(n) + " vertices over cap " +
                             std::to_string(opts.dp_cap));
    AlphaTable table(g, opts.dp_cap);
    const std::uint32_t full = (n == 32) ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;
    std::uint32_t best_mask = 1;
    long best_size = 1, best_alpha = 1;
    VertexSet best_set = mask_to_set(best_mask, n);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        long size = std::popcount(mask);
        long a = table.alpha_of(mask);
        // quick reject on ratio alone before materializing the set
        long lhs = size * best_alpha, rhs = best_size * a;
        if (lhs < rhs) continue;
        VertexSet s = mask_to_set(mask, n);
        if (better_witness(size, a, s, best_size, best_alpha, best_set)) {
            best_mask = mask;
            best_size = size;
            best_alpha = a;
            best_set = std::move(s);
        }
    }
    HallRatioResult r;
    r.value = make_rat(best_size, best_alpha);
    r.witness = best_set;
    r.exact = true;
    return r;
}

Rat hall_ratio_via_01_weights(const Graph& g, const HallOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("hall_ratio_via_01_weights: empty graph");
    if (n > opts.dp_cap)
        throw resource_error("hall_ratio_via_01_weights: " + std::to_string(n) +
                             " vertices over cap " + std::to_string(opts.dp_cap));
    Rat best = 0;
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Weighting w(n);
        int total = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) {
                w[v] = 1;
                ++total;
            }
        MwisResult r = mwis(g, w, opts.mwis);
        Rat ratio = Rat(total) / r.value;
        if (ratio > best) best = ratio;
    }
    return best;
}

namespace {

struct Scored {
    Rat ratio;
    VertexSet set;
};

class LowerBoundSearch {
public:
    LowerBoundSearch(const Graph& g, int budget, const HallOptions& opts)
        : g_(g), budget_(budget), opts_(opts) {}

    HallRatioResult run() {
        best_.ratio = 0;
        // seed candidates: the whole graph, the densest subgraph, core peels
        consider(g_.vertices());
        if (g_.edge_count() > 0) consider(densest_subgraph(g_, g_.vertices()).witness);
        auto order = degeneracy(g_).ordering;
        for (double frac : {0.5, 0.25, 0.125}) {
            std::size_t keep = std::size_t(double(order.size()) * frac);
            if (keep < 2) continue;
            VertexSet tail(order.end() - keep, order.end());
            consider(normalized_vertex_set(std::move(tail)));
        }
        local_search();
        HallRatioResult r;
        r.value = best_.ratio;
        r.witness = best_.set;
        r.exact = false;
        return r;
    }

    void consider_candidate(const VertexSet& s) { consider(s); }

private:
    bool consider(const VertexSet& s) {
        if (s.empty() || budget_ <= 0) return false;
        --budget_;
        auto sub = induced_subgraph(g_, s);
        int a = alpha(sub.graph, opts_.mwis);
        Rat ratio = Rat(int(s.size())) / a;
        if (ratio > best_.ratio) {
            best_.ratio = ratio;
            best_.set = s;
            return true;
        }
        return false;
    }

    void local_search() {
        bool improved = true;
        while (improved && budget_ > 0) {
            improved = false;
            VertexSet base = best_.set;
            for (int v : base) {
                if (budget_ <= 0) break;
                VertexSet without;
                for (int u : base)
                    if (u != v) without.push_back(u);
                if (consider(without)) {
                    improved = true;
                    break;
                }
            }
        }
    }

    const Graph& g_;
    int budget_;
    HallOptions opts_;
    Scored best_;
};

}  // namespace

HallRatioResult hall_ratio_lower_bound(const Graph& g, int budget, const HallOptions& opts) {
    if (g.vertex_count() == 0) throw input_error("hall_ratio_lower_bound: empty graph");
    LowerBoundSearch search(g, budget, opts);
    return search.run();
}

nlohmann::json hall_to_json(const HallRatioResult& r) {
    nlohmann::json j;
    j["value"] = rat_str(r.value);
    j["witness"] = r.witness;
    j["mode"] = r.exact ? "exact" : "lower-bound";
    return j;
}

}  // namespace blockfrac
