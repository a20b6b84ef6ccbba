#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blockfrac/block.hpp"
#include "blockfrac/graph.hpp"
#include "blockfrac/mwis.hpp"

namespace blockfrac {

struct DensestResult {
    Rat density;        // max |E(H)| / |V(H)| over induced H inside restrict
    VertexSet witness;  // attains it
};

// Exact maximum subgraph density by iterated min-cut: each round solves
// max |E(S)| - lambda |S| at the current guess and raises lambda to the
// witness density until no strictly denser set exists.
DensestResult densest_subgraph(const Graph& g, const VertexSet& restrict_to);

enum class CertStatus { Certified, Violated, Inconclusive };

const char* status_name(CertStatus s);
CertStatus worst_status(CertStatus a, CertStatus b);

struct CertWitness {
    VertexSet vertices;
    std::vector<Edge> edges;
};

// One checked statement instance; i/j are 1-based block and window indices.
struct CertEntry {
    std::string what;  // "propertyA" | "claim42.1" | "claim42.2"
    int i = 0;
    int j = -1;
    std::uint64_t s_min = 0;
    std::uint64_t s_max = 0;  // size range (propertyA) or size cap (claim42.1)
    CertStatus status = CertStatus::Inconclusive;
    std::uint64_t observed = 0;     // tail edge count / witness edge count
    std::uint64_t threshold = 0;    // k^4 |B_{i+1}| for claim42.2
    std::uint64_t violating_s = 0;  // the admissible s certified violated
    std::optional<CertWitness> witness;
    std::string note;
};

struct CertificateReport {
    std::string check;  // "propertyA" | "claim42"
    CertStatus status = CertStatus::Certified;
    std::vector<CertEntry> entries;
    nlohmann::json params;

    nlohmann::json to_json() const;
    bool fully_certified() const { return status == CertStatus::Certified; }
};

struct CertificateOptions {
    int bruteforce_cap = 18;  // largest window resolved exhaustively when needed
};

// i, j, the window vertex set, and the admissible s-range, 1-based.
struct WindowSpec {
    int i = 0;
    int j = 0;
    VertexSet window;
    std::uint64_t s_min = 0;
    std::uint64_t s_max = 0;
};

// Windows with a nonempty s-range, in (i, j) order; B_r is empty outside [k].
std::vector<WindowSpec> property_a_windows(const BlockGraph& bg);

// No window-confined subgraph on at most s vertices with at least 3s edges,
// for any admissible (i, j, s). Window density below 3 certifies the window;
// a density witness that fits the size range refutes it; otherwise the
// window is resolved exhaustively when small enough, else Inconclusive.
CertificateReport check_property_A(const BlockGraph& bg, const CertificateOptions& opts = {});

// Statement 1 per i: no nonempty subgraph of the prefix union B_1..B_{i-1}
// with at most k^5 |B_i| vertices and average degree >= 3 (density >= 3/2).
// Statement 2 per i: the tail union B_{i+1}..B_k spans at most k^4 |B_{i+1}|
// edges, checked by exact counting. Prefix degeneracies are reported in
// params.
CertificateReport check_claim42(const BlockGraph& bg, const CertificateOptions& opts = {});

// Re-verifies a serialized report's witnesses against the raw graph: edge
// membership, counts, and thresholds are all recomputed. Returns the list
// of failures (empty = everything checks out).
std::vector<std::string> recheck_report(const BlockGraph& bg, const nlohmann::json& report);

struct Lemma31Report {
    int i = 0;         // 1-based; s-range index of |V(h)|
    int chosen_part;   // -1 for the block part, else window index j
    std::uint64_t subgraph_size = 0;
    std::vector<std::uint64_t> part_sizes;  // |X_{-1}|, |X_0|, ...
    std::uint64_t independent_size = 0;
    std::uint64_t denominator = 0;  // 112 (ceil(log2 k) + 1)^2
    bool bound_holds = false;       // |I| * denominator >= |V(h)|
    // 112-form <= 300 (log log n)^2 at the profile's n, when n is known
    std::optional<bool> within_loglog_constant;
};

// Splits h across the window partition at its size index, takes the largest
// part, and extracts an independent set: the block part verbatim, any other
// part via the minimum-degree greedy on the host-induced subgraph. The
// result is independent in bg.graph unconditionally.
std::pair<VertexSet, Lemma31Report> extract_lemma31(const BlockGraph& bg, const Subgraph& h,
                                                    double profile_n = 0);

struct Lemma41Report {
    int i = 0;  // 1-based; k^5-range index of the isolated-free core
    std::uint64_t core_vertices = 0;
    std::uint64_t core_edges = 0;
    std::uint64_t x_size = 0;        // |X|, the part before block i
    std::uint64_t x_prime_size = 0;  // |X'| = |X| + |core ∩ B_i|
    int x_degeneracy = 0;
    std::vector<std::uint64_t> class_sizes;  // the four color classes
    std::uint64_t tail_edges = 0;            // |F|
    std::uint64_t touched_by_j = 0;
    bool largest_class_quarter = false;  // 4 |I| >= |X'|
    bool touched_quarter = false;        // 4 touched >= |E(h) \ F|
    bool slack_vertices = false;         // k |B_{i+1}| (4+d) <= d |V(h)|
    bool slack_edges = false;            // |F| (4+d) <= d |E(h)|
    bool conclusion_vertices = false;    // |I| (4+d) >= |V(h)|
    bool conclusion_edges = false;       // touched (4+d) >= |E(h)|
    VertexSet isolated_added;            // re-added to I; independence then holds in h
    std::vector<VertexSet> classes;      // the four classes partitioning X'
};

struct Lemma41Result {
    VertexSet I;  // largest class plus h's isolated vertices
    VertexSet J;  // class touching the most h-edges; independent in bg.graph
    Lemma41Report report;
};

// Four-colors the subgraph: a degeneracy-greedy 3-coloring of the prefix
// part plus block B_i as the fourth class. Throws certificate_error when
// the prefix part is not 2-degenerate (claim42 statement 1 failed there).
Lemma41Result extract_lemma41(const BlockGraph& bg, const Subgraph& h, const Rat& delta);

struct Thm13Report {
    Rat alpha_deg;      // alpha_w(G) with w = deg_h
    std::uint64_t edges = 0;
    Rat threshold;      // |E(h)| / (4+delta)
    bool passes = false;
    bool j_cross_check_ran = false;
    bool j_cross_check_ok = false;  // touched(J) equals sum of deg_h over J
    bool slack_holds = false;       // both slack inequalities, from the extractor
};

Thm13Report verify_theorem13_weights(const BlockGraph& bg, const Subgraph& h, const Rat& delta,
                                     const MwisOptions& mwis_opts = {});

nlohmann::json lemma31_to_json(const VertexSet& I, const Lemma31Report& rep);
nlohmann::json lemma41_to_json(const Lemma41Result& res);
nlohmann::json thm13_to_json(const Thm13Report& rep);

}  // namespace blockfrac
