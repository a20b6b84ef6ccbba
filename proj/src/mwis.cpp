#include "blockfrac/mwis.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "blockfrac/errors.hpp"

namespace blockfrac {

namespace {

// Branch and bound over one connected component (local vertex indices).
class BranchSolver {
public:
    BranchSolver(const Graph& g, const std::vector<Rat>& w, std::uint64_t node_cap)
        : g_(g), w_(w), cap_(node_cap), best_val_(-1) {}

    std::uint64_t nodes_used() const { return nodes_; }

    MwisResult solve(const Bitset& candidates) {
        Bitset cur(g_.vertex_count());
        best_set_ = cur;
        best_val_ = 0;
        recurse(candidates, cur, Rat(0));
        MwisResult r;
        r.value = best_val_;
        best_set_.for_each([&](int v) { r.set.push_back(v); });
        return r;
    }

private:
    void recurse(Bitset cand, Bitset& cur, Rat cur_w) {
        if (++nodes_ > cap_)
            throw resource_error("mwis: branch node cap exceeded (" + std::to_string(cap_) + ")");
        if (!cand.any()) {
            if (cur_w > best_val_) {
                best_val_ = cur_w;
                best_set_ = cur;
            }
            return;
        }
        if (cur_w + clique_cover_bound(cand) <= best_val_) return;

        int v = pick_branch_vertex(cand);
        // include first
        Bitset without_nv = cand;
        without_nv.subtract(g_.row(v));
        without_nv.reset(v);
        cur.set(v);
        recurse(without_nv, cur, cur_w + w_[v]);
        cur.reset(v);
        // exclude
        cand.reset(v);
        recurse(cand, cur, std::move(cur_w));
    }

    int pick_branch_vertex(const Bitset& cand) const {
        int best = -1, best_deg = -1;
        cand.for_each([&](int v) {
            int d = g_.row(v).intersection_count(cand);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        });
        return best;
    }

    // Greedy clique partition of the candidate set; each clique contributes
    // its maximum weight. Exact rational sum, so cuts are always safe.
    Rat clique_cover_bound(const Bitset& cand) const {
        Bitset left = cand;
        Rat bound = 0;
        while (true) {
            int v = left.lowest();
            if (v < 0) break;
            left.reset(v);
            Rat mx = w_[v];
            Bitset common = g_.row(v);
            common &= left;
            while (true) {
                int u = common.lowest();
                if (u < 0) break;
                left.reset(u);
                if (w_[u] > mx) mx = w_[u];
                common.reset(u);
                common &= g_.row(u);
            }
            bound += mx;
        }
        return bound;
    }

    const Graph& g_;
    const std::vector<Rat>& w_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    Rat best_val_;
    Bitset best_set_;
};

struct Fold {
    int leaf;      // global index, excluded iff neighbor ends up chosen
    int neighbor;  // global index
};

}  // namespace

MwisResult mwis(const Graph& g, const Weighting& w, const MwisOptions& opts) {
    if (w.size() != g.vertex_count()) throw input_error("mwis: weighting size mismatch");
    if (!w.all_nonnegative()) throw input_error("mwis: negative weight");

    MwisResult result;
    result.value = 0;
    std::uint64_t nodes_left = opts.node_cap;

    for (const VertexSet& comp : g.connected_components()) {
        // Zero-weight vertices never help; dropping them also splits the
        // component further.
        VertexSet carry;
        for (int v : comp)
            if (w[v] > 0) carry.push_back(v);
        if (carry.empty()) continue;
        if (carry.size() == 1) {
            result.set.push_back(carry[0]);
            result.value += w[carry[0]];
            continue;
        }

        auto [local, to_global] = induced_subgraph(g, carry);

        // degree-0 / degree-1 reductions; leaves of equal or heavier weight
        // than their neighbor are taken greedily, lighter leaves are folded
        // into the neighbor's weight and resolved after the residual solve.
        const int ln = local.vertex_count();
        std::vector<Rat> lw(ln);
        for (int v = 0; v < ln; ++v) lw[v] = w[to_global[v]];
        std::vector<int> deg(ln);
        for (int v = 0; v < ln; ++v) deg[v] = local.degree(v);
        Bitset alive = local.full_mask();
        std::vector<Fold> folds;
        std::vector<int> taken_local;
        Rat fold_base = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < ln; ++v) {
                if (!alive.test(v) || deg[v] > 1) continue;
                changed = true;
                if (deg[v] == 0) {
                    taken_local.push_back(v);
                    alive.reset(v);
                    continue;
                }
                Bitset nb = local.row(v);
                nb &= alive;
                int u = nb.lowest();
                if (lw[v] >= lw[u]) {
                    taken_local.push_back(v);
                    alive.reset(v);
                    alive.reset(u);
                    Bitset un = local.row(u);
                    un &= alive;
                    un.for_each([&](int x) { --deg[x]; });
                } else {
                    // opt(G) = w(v) + opt(G - v with w(u) reduced by w(v))
                    folds.push_back({to_global[v], to_global[u]});
                    fold_base += lw[v];
                    lw[u] -= lw[v];
                    alive.reset(v);
                    --deg[u];
                }
            }
        }

        Rat comp_value = fold_base;
        VertexSet comp_set;
        for (int v : taken_local) {
            comp_set.push_back(to_global[v]);
            comp_value += lw[v];
        }

        if (alive.any()) {
            BranchSolver solver(local, lw, nodes_left);
            MwisResult sub = solver.solve(alive);
            nodes_left -= std::min(nodes_left, solver.nodes_used());
            comp_value += sub.value;
            for (int v : sub.set) comp_set.push_back(to_global[v]);
        }

        // Unwind folds in reverse; the value is already accounted for by
        // fold_base, only the set needs reconstructing.
        std::vector<char> in_set(g.vertex_count(), 0);
        for (int v : comp_set) in_set[v] = 1;
        for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
            if (!in_set[it->neighbor]) {
                in_set[it->leaf] = 1;
                comp_set.push_back(it->leaf);
            }
        }

        result.value += comp_value;
        result.set.insert(result.set.end(), comp_set.begin(), comp_set.end());
    }
    result.set = normalized_vertex_set(std::move(result.set));
    return result;
}

int alpha(const Graph& g, const MwisOptions& opts) {
    Weighting unit(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) unit[v] = 1;
    MwisResult r = mwis(g, unit, opts);
    return int(r.set.size());
}

MwisResult mwis_bruteforce(const Graph& g, const Weighting& w) {
    const int n = g.vertex_count();
    if (n > 20) throw resource_error("mwis_bruteforce: capped at 20 vertices");
    if (w.size() != n) throw input_error("mwis_bruteforce: weighting size mismatch");
    if (!w.all_nonnegative()) throw input_error("mwis_bruteforce: negative weight");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    MwisResult best;
    best.value = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        bool ok = true;
        Rat total = 0;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            if (adj[v] & mask) ok = false;
            else total += w[v];
        }
        if (!ok) continue;
        if (total > best.value) {
            best.value = total;
            best.set.clear();
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) best.set.push_back(v);
        }
    }
    return best;
}

AlphaTable::AlphaTable(const Graph& g, int cap) : n_(g.vertex_count()) {
    if (n_ > cap || cap > 30)
        throw resource_error("alpha table: " + std::to_string(n_) + " vertices over cap " +
                             std::to_string(std::min(cap, 30)));
    std::vector<std::uint32_t> closed(n_, 0);
    for (int v = 0; v < n_; ++v) closed[v] = std::uint32_t(1) << v;
    for (auto [u, v] : g.edges()) {
        closed[u] |= std::uint32_t(1) << v;
        closed[v] |= std::uint32_t(1) << u;
    }
    table_.assign(std::size_t(1) << n_, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n_); ++mask) {
        int v = std::countr_zero(mask);
        std::uint8_t skip = table_[mask & (mask - 1)];  // drop lowest vertex
        std::uint8_t take = std::uint8_t(1 + table_[mask & ~closed[v]]);
        table_[mask] = std::max(skip, take);
    }
}

}  // namespace blockfrac
