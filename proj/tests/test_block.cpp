#include <doctest.h>

#include <cmath>

#include "blockfrac/block.hpp"
#include "blockfrac/errors.hpp"
#include "blockfrac/rng.hpp"

using namespace blockfrac;

TEST_CASE("splitmix64 reference vectors") {
    // Canonical SplitMix64 stream for seed 0.
    CHECK(rng::draw(0, 0) == 0xe220a8397b1dcdafULL);
    CHECK(rng::draw(0, 1) == 0x6e789e6aa1b965f4ULL);
    CHECK(rng::draw(0, 2) == 0x06c45d188009454fULL);
    // Counter access agrees with sequential streaming.
    SplitMix64 s(42);
    CHECK(s.next() == rng::draw(42, 0));
    CHECK(s.next() == rng::draw(42, 1));
}

TEST_CASE("exp profile sizes") {
    CHECK(exp_profile(729).sizes == std::vector<std::uint64_t>{243, 81, 27});
    CHECK(exp_profile(9).sizes == std::vector<std::uint64_t>{3});
    CHECK(exp_profile(6561).sizes == std::vector<std::uint64_t>{2187, 729, 243, 81});
    CHECK_THROWS_AS(exp_profile(8), input_error);
    CHECK(exp_profile(729).meets_lower_bound_precondition());
}

TEST_CASE("param profile sizes") {
    SUBCASE("exponents 0.9 / 0.8 / 0.6 at n = 10^6") {
        auto p = param_profile(1e6, 2, 0.05, 3);
        CHECK(p.sizes == std::vector<std::uint64_t>{251189, 63096, 3982});
    }
    SUBCASE("single block") {
        auto p = param_profile(100, 2, 0.2, 1);
        CHECK(p.sizes == std::vector<std::uint64_t>{16});
    }
    SUBCASE("exact powers are not rounded up") {
        auto p = param_profile(100, 2, 0.25, 1);
        CHECK(p.sizes == std::vector<std::uint64_t>{10});
    }
    SUBCASE("nonpositive exponent is an input error") {
        CHECK_THROWS_AS(param_profile(1000, 2, 0.3, 2), input_error);
        CHECK_THROWS_AS(param_profile(1000, 1.5, 0.1, 2), input_error);
    }
}

TEST_CASE("tower profile at k(n) = 1") {
    CHECK_THROWS_AS(tower_profile(1e20), input_error);  // k(n) = 0
    auto p = tower_profile(1e30);
    REQUIRE(p.sizes.size() == 1);
    long double ln = logl(1e30L);
    double eps = double(1.0L / sqrtl(ln));  // profile stores eps at double precision
    auto expected = std::uint64_t(ceill(expl((1.0L - 4.0L * (long double)eps) * ln)));
    CHECK(p.sizes[0] == expected);
    CHECK(p.eps == doctest::Approx(eps));
}

TEST_CASE("custom profile validation") {
    CHECK_THROWS_AS(custom_profile({}), input_error);
    CHECK_THROWS_AS(custom_profile({2, 3}), input_error);
    CHECK_THROWS_AS(custom_profile({2, 0}), input_error);
    CHECK_FALSE(custom_profile({2, 2, 1}).meets_lower_bound_precondition());
}

TEST_CASE("expected edge count") {
    CHECK(expected_edge_count(custom_profile({3, 3, 3})) == 9);
    CHECK(expected_edge_count(custom_profile({5})) == 0);
    CHECK(expected_edge_count(custom_profile({4, 2})) == 2);
}

TEST_CASE("sample: single vertex profile") {
    BlockGraph bg = sample(custom_profile({1}), 123);
    CHECK(bg.graph.vertex_count() == 1);
    CHECK(bg.graph.edge_count() == 0);
}

TEST_CASE("sample: determinism and seed sensitivity") {
    auto prof = custom_profile({6, 5, 4});
    BlockGraph a = sample(prof, 99);
    BlockGraph b = sample(prof, 99);
    CHECK(a.graph.edges() == b.graph.edges());
    bool any_diff = false;
    for (std::uint64_t s = 0; s < 8 && !any_diff; ++s)
        any_diff = sample(prof, s).graph.edges() != a.graph.edges();
    CHECK(any_diff);
}

TEST_CASE("sample: block invariants hold for every draw") {
    auto prof = custom_profile({5, 4, 2});
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        BlockGraph bg = sample(prof, seed);  // constructor revalidates
        for (auto [u, v] : bg.graph.edges()) CHECK(bg.block_of[u] != bg.block_of[v]);
        for (const auto& block : bg.blocks) CHECK(is_independent(bg.graph, block));
    }
}

TEST_CASE("block graph rejects intra-block edges") {
    Graph g(3, {{0, 1}});
    CHECK_THROWS_AS(BlockGraph(g, {{0, 1}, {2}}), input_error);
    CHECK_THROWS_AS(BlockGraph(g, {{0}, {1}}), input_error);  // not covering
    BlockGraph ok(Graph(3, {{0, 2}}), {{0, 1}, {2}});
    CHECK(ok.block_range_union(0, 1) == VertexSet{0, 1});
    CHECK(ok.block_range_union(-3, 99) == VertexSet{0, 1, 2});
    CHECK(ok.block_range_union(2, 1).empty());
}

TEST_CASE("sample: mean edge count near expectation") {
    // [2,1]: one cross pair per vertex of B1, expectation 2 * 1/2 = 1.
    const int trials = 10000;
    double total21 = 0, total333 = 0;
    auto p21 = custom_profile({2, 1});
    auto p333 = custom_profile({3, 3, 3});
    for (int t = 0; t < trials; ++t) {
        total21 += sample(p21, rng::derive(555, t)).graph.edge_count();
        total333 += sample(p333, rng::derive(556, t)).graph.edge_count();
    }
    // per-trial variance: [2,1] = 2*(1/2)(1/2) = 0.5; [3,3,3] = 9*(1/3)(2/3) = 2
    double se21 = std::sqrt(0.5 / trials), se333 = std::sqrt(2.0 / trials);
    CHECK(std::abs(total21 / trials - 1.0) <= 4 * se21);
    CHECK(std::abs(total333 / trials - 9.0) <= 4 * se333);
}

TEST_CASE("sample: per-pair edge frequency matches 1/|B_j|") {
    auto prof = custom_profile({4, 3});
    const int trials = 4000;
    long edges = 0;
    for (int t = 0; t < trials; ++t) edges += sample(prof, rng::derive(777, t)).graph.edge_count();
    double freq = double(edges) / (12.0 * trials);
    double se = std::sqrt(0.25 * 0.75 / (12.0 * trials));
    CHECK(std::abs(freq - 0.25) <= 4 * se);
}

TEST_CASE("profile json round trip") {
    for (const BlockProfile& p : {exp_profile(729), param_profile(1e6, 2, 0.05, 3),
                                  custom_profile({7, 7, 2})}) {
        BlockProfile q = BlockProfile::from_json(p.to_json());
        CHECK(q.sizes == p.sizes);
        CHECK(q.kind_name() == p.kind_name());
    }
}
