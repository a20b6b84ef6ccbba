#include "blockfrac/block.hpp"

#include <algorithm>
#include <cmath>

#include "blockfrac/errors.hpp"
#include "blockfrac/rng.hpp"

namespace blockfrac {

using nlohmann::json;

std::uint64_t BlockProfile::total_vertices() const {
    std::uint64_t t = 0;
    for (auto s : sizes) t += s;
    return t;
}

bool BlockProfile::meets_lower_bound_precondition() const {
    int k = block_count();
    return k >= 3 && sizes.back() >= std::uint64_t(k);
}

std::string BlockProfile::kind_name() const {
    switch (kind) {
        case Kind::Exp: return "exp";
        case Kind::Tower: return "tower";
        case Kind::Param: return "param";
        case Kind::Custom: return "custom";
    }
    return "custom";
}

json BlockProfile::to_json() const {
    json j;
    j["kind"] = kind_name();
    j["sizes"] = sizes;
    if (kind == Kind::Exp) j["n"] = std::uint64_t(n);
    if (kind == Kind::Tower) j["n"] = n;
    if (kind == Kind::Param) {
        j["n"] = n;
        j["q"] = q;
        j["eps"] = eps;
        j["k"] = block_count();
    }
    return j;
}

BlockProfile BlockProfile::from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw parse_error("profile json: missing 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "exp") return exp_profile(j.at("n").get<std::uint64_t>());
    if (kind == "tower") return tower_profile(j.at("n").get<double>());
    if (kind == "param")
        return param_profile(j.at("n").get<double>(), j.at("q").get<double>(),
                             j.at("eps").get<double>(), j.at("k").get<int>());
    if (kind == "custom") return custom_profile(j.at("sizes").get<std::vector<std::uint64_t>>());
    throw parse_error("profile json: unknown kind '" + kind + "'");
}

BlockProfile exp_profile(std::uint64_t n) {
    if (n < 9) throw input_error("exp profile needs n >= 9 (otherwise k = 0)");
    int k = 0;
    std::uint64_t p = 1;  // 3^(2(k+1))
    while (p <= n / 9) {
        p *= 9;
        ++k;
    }
    BlockProfile prof;
    prof.kind = BlockProfile::Kind::Exp;
    prof.n = double(n);
    std::uint64_t denom = 1;
    for (int i = 1; i <= k; ++i) {
        denom *= 3;
        prof.sizes.push_back((n + denom - 1) / denom);
    }
    std::sort(prof.sizes.rbegin(), prof.sizes.rend());
    return prof;
}

namespace {

// ceil(n^e) in long double with a snap to nearby integers, so that exact
// powers are not pushed up by the last-ulp of expl/logl.
std::uint64_t ceil_power(double n, long double e) {
    long double x = expl(e * logl((long double)n));
    if (x >= 1.8e19L) throw resource_error("block size exceeds 64-bit range");
    long double r = roundl(x);
    if (fabsl(x - r) <= x * 1e-16L + 1e-9L) x = r;
    long double c = ceill(x);
    return c < 1.0L ? 1 : std::uint64_t(c);
}

}  // namespace

BlockProfile param_profile(double n, double q, double eps, int k) {
    if (!(n >= 2)) throw input_error("param profile: n must be >= 2");
    if (!(q >= 2)) throw input_error("param profile: q must be >= 2");
    if (!(eps > 0)) throw input_error("param profile: eps must be > 0");
    if (k < 1) throw input_error("param profile: k must be >= 1");
    BlockProfile prof;
    prof.kind = BlockProfile::Kind::Param;
    prof.n = n;
    prof.q = q;
    prof.eps = eps;
    long double qi = 1;
    for (int i = 1; i <= k; ++i) {
        qi *= (long double)q;
        long double e = 1.0L - qi * (long double)eps;
        if (!(e > 0))
            throw input_error("param profile: exponent 1 - q^" + std::to_string(i) +
                              " * eps is not positive");
        prof.sizes.push_back(ceil_power(n, e));
    }
    std::sort(prof.sizes.rbegin(), prof.sizes.rend());
    return prof;
}

BlockProfile tower_profile(double n) {
    if (!(n > 1)) throw input_error("tower profile: n must exceed 1");
    long double ln = logl((long double)n);
    int k = int(floorl(logl(ln) / (3.0L * logl(4.0L))));
    if (k < 1) throw input_error("tower profile: k(n) < 1; needs log(n) >= 64");
    double eps = double(1.0L / sqrtl(ln));
    BlockProfile prof = param_profile(n, 4.0, eps, k);
    prof.kind = BlockProfile::Kind::Tower;
    prof.q = 4.0;
    return prof;
}

BlockProfile custom_profile(std::vector<std::uint64_t> sizes) {
    if (sizes.empty()) throw input_error("custom profile: needs at least one block");
    for (auto s : sizes)
        if (s < 1) throw input_error("custom profile: block sizes must be >= 1");
    if (!std::is_sorted(sizes.rbegin(), sizes.rend()))
        throw input_error("custom profile: sizes must be nonincreasing");
    BlockProfile prof;
    prof.kind = BlockProfile::Kind::Custom;
    prof.sizes = std::move(sizes);
    return prof;
}

BlockGraph::BlockGraph(Graph g, std::vector<VertexSet> bs) : graph(std::move(g)), blocks(std::move(bs)) {
    const int n = graph.vertex_count();
    block_of.assign(n, -1);
    std::size_t prev = std::size_t(-1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].size() > prev) throw input_error("block sizes must be nonincreasing");
        prev = blocks[b].size();
        for (int v : blocks[b]) {
            if (v < 0 || v >= n) throw input_error("block vertex out of range");
            if (block_of[v] != -1) throw input_error("blocks are not disjoint");
            block_of[v] = int(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (block_of[v] == -1) throw input_error("blocks do not cover vertex " + std::to_string(v));
    for (auto [u, v] : graph.edges())
        if (block_of[u] == block_of[v])
            throw input_error("edge inside block " + std::to_string(block_of[u]) +
                              "; blocks must be independent");
}

std::vector<std::uint64_t> BlockGraph::block_sizes() const {
    std::vector<std::uint64_t> s;
    s.reserve(blocks.size());
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
}

VertexSet BlockGraph::block_range_union(int from, int to) const {
    VertexSet out;
    from = std::max(from, 0);
    to = std::min(to, block_count());
    for (int b = from; b < to; ++b) out.insert(out.end(), blocks[b].begin(), blocks[b].end());
    return normalized_vertex_set(std::move(out));
}

BlockGraph sample(const BlockProfile& profile, std::uint64_t seed, const SampleOptions& opts) {
    if (profile.sizes.empty()) throw input_error("sample: empty profile");
    std::uint64_t total = profile.total_vertices();
    if (total > opts.max_vertices)
        throw resource_error("sample: profile asks for " + std::to_string(total) +
                             " vertices, cap is " + std::to_string(opts.max_vertices));
    const int k = profile.block_count();
    const int n = int(total);
    std::vector<int> start(k + 1, 0);
    for (int b = 0; b < k; ++b) start[b + 1] = start[b] + int(profile.sizes[b]);

    std::vector<Edge> edges;
    std::uint64_t counter = 0;
    for (int j = 0; j < k; ++j) {
        std::uint64_t bj = profile.sizes[j];
        bool always = (bj == 1);
        std::uint64_t threshold = always ? 0 : std::uint64_t(((unsigned __int128)1 << 64) / bj);
        for (int i = j + 1; i < k; ++i) {
            for (int v = start[j]; v < start[j + 1]; ++v) {
                for (int u = start[i]; u < start[i + 1]; ++u) {
                    std::uint64_t r = rng::draw(seed, counter++);
                    if (always || r < threshold) edges.emplace_back(v, u);
                }
            }
        }
    }
    std::vector<VertexSet> blocks(k);
    for (int b = 0; b < k; ++b) {
        blocks[b].resize(profile.sizes[b]);
        for (std::uint64_t t = 0; t < profile.sizes[b]; ++t) blocks[b][t] = start[b] + int(t);
    }
    return BlockGraph(Graph(n, std::move(edges)), std::move(blocks));
}

Rat expected_edge_count(const BlockProfile& profile) {
    Rat total = 0;
    for (int i = 0; i < profile.block_count(); ++i) total += rat_from_u64(profile.sizes[i]) * i;
    return total;
}

}  // namespace blockfrac
