#include "blockfrac/chif.hpp"

#include <algorithm>
#include <string>

#include "blockfrac/errors.hpp"
#include "blockfrac/simplex.hpp"

namespace blockfrac {

Rat FractionalColoring::total_weight() const {
    Rat t = 0;
    for (const auto& [set, weight] : columns) t += weight;
    return t;
}

void FractionalColoring::verify_feasible(const Graph& g) const {
    std::vector<Rat> cover(g.vertex_count(), Rat(0));
    for (const auto& [set, weight] : columns) {
        if (weight <= 0) throw input_error("fractional coloring: nonpositive column weight");
        if (!is_independent(g, set)) throw input_error("fractional coloring: dependent column");
        for (int v : set) cover[v] += weight;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cover[v] < 1)
            throw input_error("fractional coloring: vertex " + std::to_string(v) + " undercovered");
}

namespace {

std::uint64_t default_iteration_cap(int n) {
    if (n >= 60) return std::uint64_t(1) << 63;
    return std::uint64_t(10) << n;
}

struct MasterSolution {
    Rat value;
    std::vector<Rat> y;                              // per local vertex
    std::vector<std::pair<VertexSet, Rat>> columns;  // local vertex sets, positive weights
    std::uint64_t rounds = 0;
};

// Restricted master in packing form: max sum(y) subject to sum(y over I) <= 1
// per known independent set I. Column generation adds the set found by exact
// MWIS pricing while its weight exceeds 1.
MasterSolution solve_component(const Graph& gc, const ChiFOptions& opts) {
    const int n = gc.vertex_count();
    std::vector<VertexSet> sets;
    auto coloring = greedy_coloring_from_degeneracy(gc, degeneracy(gc).ordering);
    sets.resize(color_count(coloring));
    for (int v = 0; v < n; ++v) sets[coloring[v]].push_back(v);

    RationalSimplex lp(n);
    std::vector<Rat> ones(n, Rat(1));
    lp.set_objective(ones);
    auto row_of = [&](const VertexSet& s) {
        std::vector<Rat> row(n, Rat(0));
        for (int v : s) row[v] = 1;
        return row;
    };
    for (const auto& s : sets) lp.add_row(row_of(s), Rat(1));
    lp.solve();

    std::uint64_t cap = opts.iteration_cap ? opts.iteration_cap : default_iteration_cap(n);
    MasterSolution sol;
    while (true) {
        if (sol.rounds >= cap) {
            Rat ub = lp.objective_value();
            throw resource_error("chi_f column generation hit iteration cap " +
                                 std::to_string(cap) + "; restricted master value (upper bound) " +
                                 ub.get_str());
        }
        ++sol.rounds;
        std::vector<Rat> y = lp.variable_values();
        Weighting w(n);
        for (int v = 0; v < n; ++v) w[v] = y[v];
        MwisResult priced = mwis(gc, w, opts.mwis);
        if (priced.value <= 1) {
            sol.y = std::move(y);
            break;
        }
        sets.push_back(priced.set);
        lp.add_row_and_reoptimize(row_of(priced.set), Rat(1));
    }

    sol.value = lp.objective_value();
    std::vector<Rat> x = lp.row_dual_values();
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (x[i] > 0) sol.columns.emplace_back(sets[i], x[i]);

    // strong duality, by hand
    Rat ysum = 0;
    for (const auto& v : sol.y) ysum += v;
    Rat xsum = 0;
    for (const auto& [s, wt] : sol.columns) xsum += wt;
    if (ysum != sol.value || xsum != sol.value)
        throw input_error("chi_f master: primal/dual value mismatch");
    return sol;
}

// Stack per-component colorings scaled to a common total, emitting unions of
// one column per component so the merged family has total weight equal to
// the maximum component value.
std::vector<std::pair<VertexSet, Rat>> merge_colorings(
    const std::vector<std::vector<std::pair<VertexSet, Rat>>>& parts, const Rat& target) {
    struct Cursor {
        std::size_t idx = 0;
        Rat remaining = 0;
    };
    std::vector<Cursor> cur(parts.size());
    for (std::size_t c = 0; c < parts.size(); ++c)
        if (!parts[c].empty()) cur[c].remaining = parts[c][0].second;

    std::vector<std::pair<VertexSet, Rat>> merged;
    Rat left = target;
    while (left > 0) {
        Rat step = left;
        for (std::size_t c = 0; c < parts.size(); ++c)
            if (cur[c].idx < parts[c].size() && cur[c].remaining < step) step = cur[c].remaining;
        if (step <= 0) throw input_error("chi_f merge: component totals disagree");
        VertexSet uni;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            if (cur[c].idx >= parts[c].size()) continue;
            const auto& set = parts[c][cur[c].idx].first;
            uni.insert(uni.end(), set.begin(), set.end());
            cur[c].remaining -= step;
            if (cur[c].remaining == 0 && cur[c].idx + 1 < parts[c].size()) {
                ++cur[c].idx;
                cur[c].remaining = parts[c][cur[c].idx].second;
            }
        }
        merged.emplace_back(normalized_vertex_set(std::move(uni)), step);
        left -= step;
    }
    return merged;
}

}  // namespace

ChiFResult chi_f_colgen(const Graph& g, const ChiFOptions& opts) {
    if (g.vertex_count() == 0) throw input_error("chi_f_colgen: empty graph");

    auto comps = g.connected_components();
    std::vector<std::vector<std::pair<VertexSet, Rat>>> colorings;
    ChiFResult result;
    result.value = 0;
    result.dual.y = Weighting(g.vertex_count());
    std::size_t best_comp = 0;
    std::vector<std::vector<Rat>> duals;

    for (std::size_t c = 0; c < comps.size(); ++c) {
        auto [gc, to_global] = induced_subgraph(g, comps[c]);
        MasterSolution sol = solve_component(gc, opts);
        result.pricing_rounds += sol.rounds;
        std::vector<std::pair<VertexSet, Rat>> cols;
        for (auto& [set, wt] : sol.columns) {
            VertexSet global;
            for (int v : set) global.push_back(to_global[v]);
            cols.emplace_back(normalized_vertex_set(std::move(global)), wt);
        }
        colorings.push_back(std::move(cols));
        duals.push_back(std::move(sol.y));
        if (sol.value > result.value) {
            result.value = sol.value;
            best_comp = c;
        }
    }

    // scale every component's cover up to the max value, then stack
    for (std::size_t c = 0; c < colorings.size(); ++c) {
        Rat total = 0;
        for (auto& [s, wt] : colorings[c]) total += wt;
        if (total != result.value) {
            Rat scale = result.value / total;
            for (auto& [s, wt] : colorings[c]) wt *= scale;
        }
    }
    result.primal.columns = merge_colorings(colorings, result.value);
    for (std::size_t i = 0; i < comps[best_comp].size(); ++i)
        result.dual.y[comps[best_comp][i]] = duals[best_comp][i];

    result.primal.verify_feasible(g);
    if (result.primal.total_weight() != result.value)
        throw input_error("chi_f_colgen: merged primal value mismatch");
    MwisResult certify = mwis(g, result.dual.y, opts.mwis);
    if (certify.value > 1) throw input_error("chi_f_colgen: dual witness failed certification");
    if (result.dual.y.total() != result.value)
        throw input_error("chi_f_colgen: dual value mismatch");
    return result;
}

ChiFResult chi_f_enumerate(const Graph& g, const ChiFOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.enumerate_cap)
        throw resource_error("chi_f_enumerate: " + std::to_string(n) + " vertices over cap " +
                             std::to_string(opts.enumerate_cap));
    ChiFResult result;
    if (n == 0) {
        result.value = 0;
        result.dual.y = Weighting(0);
        return result;
    }

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<char> independent(std::size_t(full) + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v & 1) && (adj[v] & mask)) ok = false;
        independent[mask] = ok;
    }
    // maximal independent sets dominate the rest as packing constraints
    std::vector<std::uint32_t> truly_maximal;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!independent[mask]) continue;
        bool is_maximal = true;
        for (int v = 0; v < n && is_maximal; ++v) {
            std::uint32_t with = mask | (std::uint32_t(1) << v);
            if (with != mask && independent[with]) is_maximal = false;
        }
        if (is_maximal) truly_maximal.push_back(mask);
    }

    RationalSimplex lp(n);
    std::vector<Rat> ones(n, Rat(1));
    lp.set_objective(ones);
    std::vector<VertexSet> sets;
    for (std::uint32_t mask : truly_maximal) {
        VertexSet s;
        std::vector<Rat> row(n, Rat(0));
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) {
                s.push_back(v);
                row[v] = 1;
            }
        sets.push_back(std::move(s));
        lp.add_row(row, Rat(1));
    }
    lp.solve();

    result.value = lp.objective_value();
    result.dual.y = Weighting(n);
    auto y = lp.variable_values();
    for (int v = 0; v < n; ++v) result.dual.y[v] = y[v];
    auto x = lp.row_dual_values();
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (x[i] > 0) result.primal.columns.emplace_back(sets[i], x[i]);

    // independent certification: cover, packing over every independent set,
    // and exact value agreement
    result.primal.verify_feasible(g);
    if (result.primal.total_weight() != result.value)
        throw input_error("chi_f_enumerate: primal value mismatch");
    if (result.dual.y.total() != result.value)
        throw input_error("chi_f_enumerate: dual value mismatch");
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!independent[mask]) continue;
        Rat sum = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) sum += result.dual.y[v];
        if (sum > 1) throw input_error("chi_f_enumerate: dual witness infeasible");
    }
    return result;
}

Rat weight_ratio_lower_bound(const Graph& g, const Weighting& w, const MwisOptions& opts) {
    if (w.size() != g.vertex_count()) throw input_error("weight_ratio: size mismatch");
    if (!w.all_nonnegative()) throw input_error("weight_ratio: negative weight");
    if (w.all_zero()) throw input_error("weight_ratio: all-zero weighting");
    MwisResult r = mwis(g, w, opts);
    return w.total() / r.value;
}

Weighting block_weighting(const BlockGraph& bg) {
    Weighting w(bg.graph.vertex_count());
    for (const auto& block : bg.blocks) {
        Rat share = Rat(1) / rat_from_u64(block.size());
        for (int v : block) w[v] = share;
    }
    return w;
}

Rat block_weight_lower_bound(const BlockGraph& bg, const MwisOptions& opts) {
    return weight_ratio_lower_bound(bg.graph, block_weighting(bg), opts);
}

nlohmann::json chif_to_json(const ChiFResult& r) {
    nlohmann::json j;
    j["value"] = rat_str(r.value);
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& [set, weight] : r.primal.columns)
        cols.push_back(nlohmann::json::array({nlohmann::json(set), rat_str(weight)}));
    j["columns"] = std::move(cols);
    nlohmann::json dual = nlohmann::json::object();
    for (int v = 0; v < r.dual.y.size(); ++v)
        if (r.dual.y[v] != 0) dual[std::to_string(v)] = rat_str(r.dual.y[v]);
    j["dual"] = std::move(dual);
    return j;
}

}  // namespace blockfrac
