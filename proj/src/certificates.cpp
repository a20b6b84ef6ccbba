#include "blockfrac/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blockfrac/errors.hpp"
#include "blockfrac/maxflow.hpp"

namespace blockfrac {

using nlohmann::json;

namespace {

constexpr std::int64_t kInf = std::int64_t(1) << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = (unsigned __int128)a * b;
    return p > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : std::uint64_t(p);
}

int ceil_log2(std::uint64_t k) {
    int t = 0;
    while ((std::uint64_t(1) << t) < k) ++t;
    return t;
}

}  // namespace

const char* status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::Violated: return "Violated";
        case CertStatus::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

CertStatus worst_status(CertStatus a, CertStatus b) {
    if (a == CertStatus::Violated || b == CertStatus::Violated) return CertStatus::Violated;
    if (a == CertStatus::Inconclusive || b == CertStatus::Inconclusive)
        return CertStatus::Inconclusive;
    return CertStatus::Certified;
}

DensestResult densest_subgraph(const Graph& g, const VertexSet& restrict_to) {
    VertexSet region = normalized_vertex_set(restrict_to);
    if (region.empty()) throw input_error("densest_subgraph: empty restriction");
    Subgraph ind = Subgraph::induced(g, region);
    if (ind.edges.empty()) return {Rat(0), region};

    const int nv = int(region.size());
    const int m = ind.edge_count();
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < nv; ++i) pos[region[i]] = i;

    auto induced_edges_in = [&](const VertexSet& s) {
        std::vector<char> in(g.vertex_count(), 0);
        for (int v : s) in[v] = 1;
        int cnt = 0;
        for (auto [u, v] : ind.edges)
            if (in[u] && in[v]) ++cnt;
        return cnt;
    };

    VertexSet best = region;
    Rat lam = make_rat(m, nv);
    for (int round = 0;; ++round) {
        if (round > 300) throw input_error("densest_subgraph: too many rounds");
        std::int64_t num = lam.get_num().get_si();
        std::int64_t den = lam.get_den().get_si();

        const int SRC = 0, SNK = 1, EBASE = 2, VBASE = 2 + m;
        MaxFlow mf(2 + m + nv);
        for (int e = 0; e < m; ++e) {
            mf.add_edge(SRC, EBASE + e, den);
            mf.add_edge(EBASE + e, VBASE + pos[ind.edges[e].first], kInf);
            mf.add_edge(EBASE + e, VBASE + pos[ind.edges[e].second], kInf);
        }
        for (int i = 0; i < nv; ++i) mf.add_edge(VBASE + i, SNK, num);

        std::int64_t flow = mf.run(SRC, SNK);
        if (flow >= std::int64_t(m) * den) break;  // nothing strictly denser than lam

        auto side = mf.min_cut_source_side(SRC);
        VertexSet cut;
        for (int i = 0; i < nv; ++i)
            if (side[VBASE + i]) cut.push_back(region[i]);
        Rat next = make_rat(induced_edges_in(cut), long(cut.size()));
        if (!(next > lam)) throw input_error("densest_subgraph: cut did not improve density");
        lam = next;
        best = std::move(cut);
    }
    return {lam, best};
}

namespace {

struct LocalMasks {
    std::vector<std::uint32_t> adj;
    VertexSet ids;  // local -> global
};

LocalMasks local_masks(const Graph& g, const VertexSet& region) {
    LocalMasks lm;
    lm.ids = region;
    const int n = int(region.size());
    lm.adj.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.has_edge(region[a], region[b])) {
                lm.adj[a] |= std::uint32_t(1) << b;
                lm.adj[b] |= std::uint32_t(1) << a;
            }
    return lm;
}

CertWitness witness_from_mask(const Graph& g, const LocalMasks& lm, std::uint32_t mask) {
    CertWitness w;
    for (std::size_t v = 0; v < lm.ids.size(); ++v)
        if (mask >> v & 1) w.vertices.push_back(lm.ids[v]);
    Subgraph ind = Subgraph::induced(g, w.vertices);
    w.edges = ind.edges;
    return w;
}

int mask_edges(const LocalMasks& lm, std::uint32_t mask) {
    int cnt = 0;
    for (std::size_t v = 0; v < lm.ids.size(); ++v)
        if (mask >> v & 1) cnt += std::popcount(lm.adj[v] & mask);
    return cnt / 2;
}

// first subset (in mask order) with at most s_max vertices and at least
// 3 * max(|S|, s_min) edges
std::optional<std::pair<CertWitness, std::uint64_t>> window_violation_bruteforce(
    const Graph& g, const VertexSet& window, std::uint64_t s_min, std::uint64_t s_max) {
    LocalMasks lm = local_masks(g, window);
    const int n = int(window.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint64_t sz = std::uint64_t(std::popcount(mask));
        if (sz > s_max) continue;
        std::uint64_t sv = std::max(sz, s_min);
        if (sv > s_max) continue;
        if (std::uint64_t(mask_edges(lm, mask)) >= 3 * sv)
            return std::make_pair(witness_from_mask(g, lm, mask), sv);
    }
    return std::nullopt;
}

// first nonempty subset within the size cap whose density reaches 3/2
std::optional<CertWitness> prefix_violation_bruteforce(const Graph& g, const VertexSet& prefix,
                                                       std::uint64_t size_cap) {
    LocalMasks lm = local_masks(g, prefix);
    const int n = int(prefix.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint64_t sz = std::uint64_t(std::popcount(mask));
        if (sz > size_cap) continue;
        if (std::uint64_t(2 * mask_edges(lm, mask)) >= 3 * sz)
            return witness_from_mask(g, lm, mask);
    }
    return std::nullopt;
}

}  // namespace

std::vector<WindowSpec> property_a_windows(const BlockGraph& bg) {
    auto sizes = bg.block_sizes();
    const int k = bg.block_count();
    std::vector<WindowSpec> out;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t s_max = 2 * sizes[i - 1];
        std::uint64_t s_min = (i < k ? 2 * sizes[i] : 0) + 1;
        if (s_min > s_max) continue;  // ties in block sizes leave no admissible s
        for (int j = 0; (1 << j) < i; ++j) {
            WindowSpec w;
            w.i = i;
            w.j = j;
            w.s_min = s_min;
            w.s_max = s_max;
            w.window = bg.block_range_union(i - (1 << (j + 1)), i - (1 << j));
            out.push_back(std::move(w));
        }
    }
    return out;
}

CertificateReport check_property_A(const BlockGraph& bg, const CertificateOptions& opts) {
    CertificateReport rep;
    rep.check = "propertyA";
    rep.params = {{"k", bg.block_count()},
                  {"sizes", bg.block_sizes()},
                  {"bruteforce_cap", opts.bruteforce_cap}};
    for (const WindowSpec& w : property_a_windows(bg)) {
        CertEntry e;
        e.what = "propertyA";
        e.i = w.i;
        e.j = w.j;
        e.s_min = w.s_min;
        e.s_max = w.s_max;

        DensestResult d = densest_subgraph(bg.graph, w.window);
        if (d.density < 3) {
            e.status = CertStatus::Certified;
        } else {
            Subgraph wit = Subgraph::induced(bg.graph, d.witness);
            std::uint64_t sv = std::max<std::uint64_t>(wit.vertex_count(), w.s_min);
            if (std::uint64_t(wit.vertex_count()) <= w.s_max && sv <= w.s_max &&
                std::uint64_t(wit.edge_count()) >= 3 * sv) {
                e.status = CertStatus::Violated;
                e.witness = CertWitness{wit.vertices, wit.edges};
                e.violating_s = sv;
                e.observed = wit.edge_count();
            } else if (int(w.window.size()) <= opts.bruteforce_cap) {
                auto bf = window_violation_bruteforce(bg.graph, w.window, w.s_min, w.s_max);
                if (bf) {
                    e.status = CertStatus::Violated;
                    e.witness = bf->first;
                    e.violating_s = bf->second;
                    e.observed = bf->first.edges.size();
                } else {
                    e.status = CertStatus::Certified;
                }
                e.note = "resolved exhaustively";
            } else {
                e.status = CertStatus::Inconclusive;
                e.note = "dense witness outside the admissible size range";
            }
        }
        rep.status = worst_status(rep.status, e.status);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

CertificateReport check_claim42(const BlockGraph& bg, const CertificateOptions& opts) {
    CertificateReport rep;
    rep.check = "claim42";
    auto sizes = bg.block_sizes();
    const int k = bg.block_count();
    std::uint64_t kp4 = sat_mul(sat_mul(k, k), sat_mul(k, k));
    std::uint64_t kp5 = sat_mul(kp4, k);
    rep.params = {{"k", k},
                  {"sizes", sizes},
                  {"bruteforce_cap", opts.bruteforce_cap}};

    // statement 2: exact tail edge counts
    for (int i = 1; i <= k; ++i) {
        CertEntry e;
        e.what = "claim42.2";
        e.i = i;
        std::uint64_t tail_edges = 0;
        for (auto [u, v] : bg.graph.edges())
            if (bg.block_of[u] >= i && bg.block_of[v] >= i) ++tail_edges;
        e.observed = tail_edges;
        e.threshold = sat_mul(kp4, i < k ? sizes[i] : 0);
        if (tail_edges <= e.threshold) {
            e.status = CertStatus::Certified;
        } else {
            e.status = CertStatus::Violated;
            CertWitness w;
            w.vertices = bg.block_range_union(i, k);
            for (auto [u, v] : bg.graph.edges())
                if (bg.block_of[u] >= i && bg.block_of[v] >= i) w.edges.emplace_back(u, v);
            e.witness = std::move(w);
        }
        rep.status = worst_status(rep.status, e.status);
        rep.entries.push_back(std::move(e));
    }

    // statement 1: density of each prefix union, plus its degeneracy
    json degs = json::array();
    for (int i = 1; i <= k; ++i) {
        CertEntry e;
        e.what = "claim42.1";
        e.i = i;
        e.s_max = sat_mul(kp5, sizes[i - 1]);  // vertex-count cap for a violation
        VertexSet prefix = bg.block_range_union(0, i - 1);
        if (prefix.empty()) {
            e.status = CertStatus::Certified;
            e.note = "empty prefix";
            degs.push_back(0);
        } else {
            auto sub = induced_subgraph(bg.graph, prefix);
            degs.push_back(degeneracy(sub.graph).degeneracy);
            DensestResult d = densest_subgraph(bg.graph, prefix);
            if (2 * d.density < 3) {
                e.status = CertStatus::Certified;
            } else {
                Subgraph wit = Subgraph::induced(bg.graph, d.witness);
                if (std::uint64_t(wit.vertex_count()) <= e.s_max) {
                    e.status = CertStatus::Violated;
                    e.witness = CertWitness{wit.vertices, wit.edges};
                    e.observed = wit.edge_count();
                } else if (int(prefix.size()) <= opts.bruteforce_cap) {
                    auto bf = prefix_violation_bruteforce(bg.graph, prefix, e.s_max);
                    if (bf) {
                        e.status = CertStatus::Violated;
                        e.observed = bf->edges.size();
                        e.witness = std::move(*bf);
                    } else {
                        e.status = CertStatus::Certified;
                    }
                    e.note = "resolved exhaustively";
                } else {
                    e.status = CertStatus::Inconclusive;
                    e.note = "dense witness above the vertex cap";
                }
            }
        }
        rep.status = worst_status(rep.status, e.status);
        rep.entries.push_back(std::move(e));
    }
    rep.params["prefix_degeneracy"] = std::move(degs);
    return rep;
}

json CertificateReport::to_json() const {
    json j;
    j["check"] = check;
    j["status"] = status_name(status);
    j["params"] = params;
    json es = json::array();
    for (const CertEntry& e : entries) {
        json je;
        je["what"] = e.what;
        je["i"] = e.i;
        if (e.j >= 0) je["j"] = e.j;
        je["status"] = status_name(e.status);
        if (e.s_min || e.s_max) {
            je["s_min"] = e.s_min;
            je["s_max"] = e.s_max;
        }
        je["observed"] = e.observed;
        je["threshold"] = e.threshold;
        if (e.violating_s) je["violating_s"] = e.violating_s;
        if (!e.note.empty()) je["note"] = e.note;
        if (e.witness) {
            json w;
            w["vertices"] = e.witness->vertices;
            json edges = json::array();
            for (auto [u, v] : e.witness->edges) edges.push_back(json::array({u, v}));
            w["edges"] = std::move(edges);
            je["witness"] = std::move(w);
        }
        es.push_back(std::move(je));
    }
    j["entries"] = std::move(es);
    return j;
}

std::vector<std::string> recheck_report(const BlockGraph& bg, const json& report) {
    std::vector<std::string> failures;
    auto fail = [&](const std::string& msg) { failures.push_back(msg); };
    if (!report.is_object() || !report.contains("entries")) {
        fail("report: missing entries");
        return failures;
    }
    auto sizes = bg.block_sizes();
    const int k = bg.block_count();
    std::uint64_t kp4 = sat_mul(sat_mul(k, k), sat_mul(k, k));
    std::uint64_t kp5 = sat_mul(kp4, k);

    int idx = -1;
    for (const json& je : report["entries"]) {
        ++idx;
        std::string where = "entry " + std::to_string(idx);
        if (!je.contains("witness")) continue;
        std::string what = je.value("what", "");
        int i = je.value("i", 0);
        if (i < 1 || i > k) {
            fail(where + ": bad block index");
            continue;
        }
        VertexSet verts;
        std::vector<Edge> edges;
        for (const auto& v : je["witness"]["vertices"]) verts.push_back(v.get<int>());
        for (const auto& ed : je["witness"]["edges"]) edges.emplace_back(ed[0].get<int>(), ed[1].get<int>());
        VertexSet norm = normalized_vertex_set(verts);
        if (norm.size() != verts.size()) fail(where + ": duplicate witness vertices");
        for (int v : norm)
            if (v < 0 || v >= bg.graph.vertex_count()) fail(where + ": vertex out of range");
        for (auto [u, v] : edges) {
            if (!bg.graph.has_edge(u, v)) fail(where + ": edge not in graph");
            if (!std::binary_search(norm.begin(), norm.end(), u) ||
                !std::binary_search(norm.begin(), norm.end(), v))
                fail(where + ": edge endpoint outside witness");
        }

        if (what == "propertyA") {
            int j = je.value("j", 0);
            std::uint64_t s = je.value("violating_s", std::uint64_t(0));
            std::uint64_t s_max = 2 * sizes[i - 1];
            std::uint64_t s_min = (i < k ? 2 * sizes[i] : 0) + 1;
            if (s < s_min || s > s_max) fail(where + ": violating s outside the admissible range");
            if (std::uint64_t(norm.size()) > s) fail(where + ": witness larger than s");
            if (std::uint64_t(edges.size()) < 3 * s) fail(where + ": fewer than 3s edges");
            VertexSet window = bg.block_range_union(i - (1 << (j + 1)), i - (1 << j));
            for (int v : norm)
                if (!std::binary_search(window.begin(), window.end(), v))
                    fail(where + ": witness vertex outside window");
        } else if (what == "claim42.1") {
            if (std::uint64_t(norm.size()) > sat_mul(kp5, sizes[i - 1]))
                fail(where + ": witness above the vertex cap");
            if (2 * std::uint64_t(edges.size()) < 3 * std::uint64_t(norm.size()))
                fail(where + ": density below 3/2");
            for (int v : norm)
                if (bg.block_of[v] >= i - 1) fail(where + ": witness vertex outside prefix");
        } else if (what == "claim42.2") {
            std::uint64_t tail_edges = 0;
            for (auto [u, v] : bg.graph.edges())
                if (bg.block_of[u] >= i && bg.block_of[v] >= i) ++tail_edges;
            std::uint64_t threshold = sat_mul(kp4, i < k ? sizes[i] : 0);
            if (tail_edges != std::uint64_t(edges.size()))
                fail(where + ": tail edge recount disagrees");
            if (tail_edges <= threshold) fail(where + ": recount does not exceed the threshold");
        } else {
            fail(where + ": unknown check '" + what + "'");
        }
    }
    return failures;
}

std::pair<VertexSet, Lemma31Report> extract_lemma31(const BlockGraph& bg, const Subgraph& h,
                                                    double profile_n) {
    h.validate_against(bg.graph);
    if (h.vertices.empty()) throw input_error("extract_lemma31: empty subgraph");
    auto sizes = bg.block_sizes();
    const int k = bg.block_count();
    const std::uint64_t s = h.vertices.size();

    Lemma31Report rep;
    rep.subgraph_size = s;
    if (s > 2 * sizes[0])
        throw input_error("extract_lemma31: subgraph larger than 2|B_1|; no size index exists");
    int i = 0;
    for (int c = 1; c <= k; ++c) {
        std::uint64_t lo = c < k ? 2 * sizes[c] : 0;
        if (s > lo && s <= 2 * sizes[c - 1]) {
            i = c;
            break;
        }
    }
    if (i == 0) throw input_error("extract_lemma31: no size index matched");
    rep.i = i;

    // X = V(h) with the tail blocks i+1..k removed
    VertexSet tail = bg.block_range_union(i, k);
    VertexSet X;
    std::set_difference(h.vertices.begin(), h.vertices.end(), tail.begin(), tail.end(),
                        std::back_inserter(X));

    // parts: X ∩ B_i, then the window pieces
    std::vector<VertexSet> parts;
    {
        VertexSet in_block;
        for (int v : X)
            if (bg.block_of[v] == i - 1) in_block.push_back(v);
        parts.push_back(std::move(in_block));
    }
    for (int j = 0; (1 << j) < i; ++j) {
        int from = i - (1 << (j + 1)), to = i - (1 << j);
        VertexSet part;
        for (int v : X) {
            int b = bg.block_of[v];
            if (b >= from && b < to) part.push_back(v);
        }
        parts.push_back(std::move(part));
    }
    for (const auto& p : parts) rep.part_sizes.push_back(p.size());

    std::size_t best = 0;
    for (std::size_t p = 1; p < parts.size(); ++p)
        if (parts[p].size() > parts[best].size()) best = p;

    VertexSet I;
    if (!parts[best].empty()) {
        rep.chosen_part = int(best) - 1;  // -1 denotes the block part
        if (best == 0) {
            I = parts[0];  // inside one block, independent as-is
        } else {
            auto sub = induced_subgraph(bg.graph, parts[best]);
            for (int v : caro_wei_greedy(sub.graph)) I.push_back(sub.index_map[v]);
            I = normalized_vertex_set(std::move(I));
        }
    } else {
        // every part empty: h lives entirely in the tail blocks; fall back
        // to the greedy over the whole subgraph
        rep.chosen_part = -2;
        auto sub = induced_subgraph(bg.graph, h.vertices);
        for (int v : caro_wei_greedy(sub.graph)) I.push_back(sub.index_map[v]);
        I = normalized_vertex_set(std::move(I));
    }

    if (!is_independent(bg.graph, I))
        throw input_error("extract_lemma31: extracted set is not independent");

    rep.independent_size = I.size();
    rep.denominator = 112 * std::uint64_t(ceil_log2(k) + 1) * std::uint64_t(ceil_log2(k) + 1);
    rep.bound_holds = rep.independent_size * rep.denominator >= s;
    if (profile_n > std::exp(1.0)) {
        double loglog = std::log(std::log(profile_n));
        rep.within_loglog_constant = double(rep.denominator) <= 300.0 * loglog * loglog;
    }
    return {std::move(I), std::move(rep)};
}

Lemma41Result extract_lemma41(const BlockGraph& bg, const Subgraph& h, const Rat& delta) {
    h.validate_against(bg.graph);
    if (h.vertices.empty()) throw input_error("extract_lemma41: empty subgraph");
    if (delta <= 0) throw input_error("extract_lemma41: delta must be positive");
    auto sizes = bg.block_sizes();
    const int k = bg.block_count();
    std::uint64_t kp5 = sat_mul(sat_mul(sat_mul(k, k), sat_mul(k, k)), k);

    Lemma41Result res;
    VertexSet isolated = h.isolated_vertices(bg.graph);
    Subgraph core = h.without_vertices(isolated);
    res.report.isolated_added = isolated;

    if (core.vertices.empty()) {
        res.I = h.vertices;  // edgeless subgraph: everything is independent in h
        return res;
    }

    const std::uint64_t s = core.vertices.size();
    res.report.core_vertices = s;
    res.report.core_edges = core.edges.size();
    int i = 0;
    for (int c = 1; c <= k; ++c) {
        std::uint64_t lo = c < k ? sat_mul(kp5, sizes[c]) : 0;
        if (s > lo && s <= sat_mul(kp5, sizes[c - 1])) {
            i = c;
            break;
        }
    }
    if (i == 0) throw input_error("extract_lemma41: no size index matched");
    res.report.i = i;

    // X: before block i; X' adds the core's part of B_i
    VertexSet X, in_bi;
    for (int v : core.vertices) {
        if (bg.block_of[v] < i - 1) X.push_back(v);
        else if (bg.block_of[v] == i - 1) in_bi.push_back(v);
    }
    res.report.x_size = X.size();
    res.report.x_prime_size = X.size() + in_bi.size();

    auto sub = induced_subgraph(bg.graph, X);
    DegeneracyResult dr = degeneracy(sub.graph);
    res.report.x_degeneracy = dr.degeneracy;
    if (dr.degeneracy > 2)
        throw certificate_error(
            "extract_lemma41: prefix part before block " + std::to_string(i) +
            " is not 2-degenerate; claim42 statement 1 does not hold for this graph");
    auto coloring = greedy_coloring_from_degeneracy(sub.graph, dr.ordering);

    std::vector<VertexSet> classes(4);
    for (int v = 0; v < sub.graph.vertex_count(); ++v)
        classes[coloring[v]].push_back(sub.index_map[v]);
    classes[3] = in_bi;
    for (auto& c : classes) c = normalized_vertex_set(std::move(c));
    for (const auto& c : classes) res.report.class_sizes.push_back(c.size());

    std::size_t largest = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].size() > classes[largest].size()) largest = c;

    std::vector<std::uint64_t> touched(4, 0);
    {
        std::vector<int> cls(bg.graph.vertex_count(), -1);
        for (int c = 0; c < 4; ++c)
            for (int v : classes[c]) cls[v] = c;
        for (auto [u, v] : core.edges) {
            if (cls[u] >= 0) ++touched[cls[u]];
            if (cls[v] >= 0 && cls[v] != cls[u]) ++touched[cls[v]];
        }
    }
    std::size_t best_touch = 0;
    for (std::size_t c = 1; c < touched.size(); ++c)
        if (touched[c] > touched[best_touch]) best_touch = c;
    res.report.touched_by_j = touched[best_touch];

    std::uint64_t tail_edges = 0, h_tail_edges = 0;
    for (auto [u, v] : bg.graph.edges())
        if (bg.block_of[u] >= i && bg.block_of[v] >= i) ++tail_edges;
    for (auto [u, v] : core.edges)
        if (bg.block_of[u] >= i && bg.block_of[v] >= i) ++h_tail_edges;
    res.report.tail_edges = tail_edges;
    std::uint64_t edges_off_tail = core.edges.size() - h_tail_edges;

    res.report.largest_class_quarter =
        4 * std::uint64_t(classes[largest].size()) >= res.report.x_prime_size;
    res.report.touched_quarter = 4 * res.report.touched_by_j >= edges_off_tail;

    Rat four_delta = Rat(4) + delta;
    Rat b_next = rat_from_u64(i < k ? sizes[i] : 0);
    res.report.slack_vertices = Rat(k) * b_next * four_delta <= delta * rat_from_u64(s);
    res.report.slack_edges =
        rat_from_u64(tail_edges) * four_delta <= delta * rat_from_u64(core.edges.size());
    res.report.conclusion_vertices =
        rat_from_u64(classes[largest].size()) * four_delta >= rat_from_u64(s);
    res.report.conclusion_edges =
        rat_from_u64(res.report.touched_by_j) * four_delta >= rat_from_u64(core.edges.size());

    res.report.classes = classes;
    res.J = classes[best_touch];
    res.I = classes[largest];
    if (!is_independent(bg.graph, res.I) || !is_independent(bg.graph, res.J))
        throw input_error("extract_lemma41: a color class is not independent");
    res.I.insert(res.I.end(), isolated.begin(), isolated.end());
    res.I = normalized_vertex_set(std::move(res.I));
    for (auto [u, v] : h.edges)  // isolated vertices cannot break independence in h
        if (std::binary_search(res.I.begin(), res.I.end(), u) &&
            std::binary_search(res.I.begin(), res.I.end(), v))
            throw input_error("extract_lemma41: extracted set is not independent in h");
    return res;
}

json lemma31_to_json(const VertexSet& I, const Lemma31Report& rep) {
    json j;
    j["I"] = I;
    json r;
    r["i"] = rep.i;
    r["chosen_part"] = rep.chosen_part;
    r["subgraph_size"] = rep.subgraph_size;
    r["part_sizes"] = rep.part_sizes;
    r["independent_size"] = rep.independent_size;
    r["denominator"] = rep.denominator;
    r["bound_holds"] = rep.bound_holds;
    if (rep.within_loglog_constant) r["within_loglog_constant"] = *rep.within_loglog_constant;
    j["report"] = std::move(r);
    return j;
}

json lemma41_to_json(const Lemma41Result& res) {
    json j;
    j["I"] = res.I;
    j["J"] = res.J;
    const Lemma41Report& rep = res.report;
    json r;
    r["i"] = rep.i;
    r["core_vertices"] = rep.core_vertices;
    r["core_edges"] = rep.core_edges;
    r["x_size"] = rep.x_size;
    r["x_prime_size"] = rep.x_prime_size;
    r["x_degeneracy"] = rep.x_degeneracy;
    r["class_sizes"] = rep.class_sizes;
    r["tail_edges"] = rep.tail_edges;
    r["touched_by_j"] = rep.touched_by_j;
    r["largest_class_quarter"] = rep.largest_class_quarter;
    r["touched_quarter"] = rep.touched_quarter;
    r["slack_vertices"] = rep.slack_vertices;
    r["slack_edges"] = rep.slack_edges;
    r["conclusion_vertices"] = rep.conclusion_vertices;
    r["conclusion_edges"] = rep.conclusion_edges;
    r["isolated_added"] = rep.isolated_added;
    j["report"] = std::move(r);
    return j;
}

json thm13_to_json(const Thm13Report& rep) {
    json j;
    j["alpha_deg"] = rat_str(rep.alpha_deg);
    j["edges"] = rep.edges;
    j["threshold"] = rat_str(rep.threshold);
    j["passes"] = rep.passes;
    j["j_cross_check_ran"] = rep.j_cross_check_ran;
    j["j_cross_check_ok"] = rep.j_cross_check_ok;
    j["slack_holds"] = rep.slack_holds;
    return j;
}

Thm13Report verify_theorem13_weights(const BlockGraph& bg, const Subgraph& h, const Rat& delta,
                                     const MwisOptions& mwis_opts) {
    h.validate_against(bg.graph);
    if (delta <= 0) throw input_error("verify_theorem13_weights: delta must be positive");
    Thm13Report rep;
    rep.edges = h.edges.size();
    Weighting w = degree_weight(bg.graph, h);
    MwisResult best = mwis(bg.graph, w, mwis_opts);
    rep.alpha_deg = best.value;
    Rat four_delta = Rat(4) + delta;
    rep.threshold = rat_from_u64(rep.edges) / four_delta;
    rep.passes = rep.alpha_deg * four_delta >= rat_from_u64(rep.edges);

    if (!h.edges.empty()) {
        try {
            Lemma41Result ext = extract_lemma41(bg, h, delta);
            rep.j_cross_check_ran = true;
            auto deg = h.degrees_on(bg.graph);
            std::uint64_t total = 0;
            for (int v : ext.J) total += std::uint64_t(deg[v]);
            rep.j_cross_check_ok = (total == ext.report.touched_by_j);
            rep.slack_holds = ext.report.slack_vertices && ext.report.slack_edges;
        } catch (const certificate_error&) {
            rep.j_cross_check_ran = false;
        }
    }
    return rep;
}

}  // namespace blockfrac
