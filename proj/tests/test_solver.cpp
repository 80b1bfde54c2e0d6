#include "doctest.h"

#include "enumerate.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "instance.hpp"
#include "solver.hpp"

using namespace reusesp;

namespace {

const DominanceMode kModes[] = {DominanceMode::Full, DominanceMode::Simple, DominanceMode::Off};

} // namespace

TEST_CASE("single edge") {
    Instance g{2, {{0, 1, 4, 1}}, 0, 1};
    for (DominanceMode mode : kModes) {
        auto r = solve_labelset(g, mode);
        REQUIRE(r.reachable());
        CHECK(*r.optimal_length == 4);
        CHECK(*r.witness == PathTrace{{0}});
    }
}

TEST_CASE("single vertex solves to zero with the empty witness") {
    Instance g{1, {}, 0, 0};
    auto r = solve_labelset(g);
    REQUIRE(r.reachable());
    CHECK(*r.optimal_length == 0);
    CHECK(*r.witness == PathTrace{});
}

TEST_CASE("unreachable sink") {
    Instance g{3, {{0, 1, 1, 1}}, 0, 2};
    for (DominanceMode mode : kModes) {
        auto r = solve_labelset(g, mode);
        CHECK_FALSE(r.reachable());
        CHECK_FALSE(r.witness.has_value());
    }
    auto b = solve_bruteforce(g);
    CHECK_FALSE(b.reachable());
}

TEST_CASE("parallel edges pick the lighter one") {
    Instance g{2, {{0, 1, 5, 1}, {0, 1, 3, 2}}, 0, 1};
    auto r = solve_labelset(g);
    CHECK(*r.optimal_length == 3);
    CHECK(*r.witness == PathTrace{{1}});
}

TEST_CASE("cost ties resolve to the lexicographically least witness") {
    Instance g{2, {{0, 1, 3, 1}, {0, 1, 3, 2}}, 0, 1};
    for (DominanceMode mode : kModes) {
        auto r = solve_labelset(g, mode);
        CHECK(*r.optimal_length == 3);
        CHECK(*r.witness == PathTrace{{0}});
    }
}

TEST_CASE("label reuse beats the plain shortest path") {
    // Top route walks weight 3 twice under one label and costs 3; the plain
    // shortest path goes below for 4 and never reuses.
    Instance g{4,
               {{0, 1, 3, 9}, {1, 3, 3, 9}, {0, 2, 2, 1}, {2, 3, 2, 2}},
               0, 3};
    auto plain = plain_shortest_path(g);
    REQUIRE(plain.has_value());
    CHECK(*plain == 4);
    for (DominanceMode mode : kModes) {
        auto r = solve_labelset(g, mode);
        CHECK(*r.optimal_length == 3);
        CHECK(*r.witness == PathTrace{{0, 1}});
    }
}

TEST_CASE("plain shortest path handles the degenerate cases") {
    Instance lone{1, {}, 0, 0};
    CHECK(plain_shortest_path(lone) == Weight{0});
    Instance cut{3, {{0, 1, 1, 1}}, 0, 2};
    CHECK_FALSE(plain_shortest_path(cut).has_value());
}

TEST_CASE("bruteforce enforces its path cap") {
    Instance g;
    g.vertex_count = 21;
    g.source = 0;
    g.sink = 20;
    Label next = 1;
    for (Vertex i = 0; i < 20; ++i) {
        g.edges.push_back({i, i + 1, 1, next++});
        g.edges.push_back({i, i + 1, 1, next++});
    }
    CHECK_THROWS_AS(solve_bruteforce(g, 1000), Error);
    try {
        solve_bruteforce(g, 1000);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("all modes agree with the exhaustive solver") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance g = generate_instance(seed);
        auto oracle = solve_bruteforce(g);
        for (DominanceMode mode : kModes) {
            auto r = solve_labelset(g, mode);
            CHECK(r.optimal_length == oracle.optimal_length);
            CHECK(r.witness == oracle.witness);
        }
    }
}

TEST_CASE("off mode never prunes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance g = generate_instance(seed);
        auto r = solve_labelset(g, DominanceMode::Off);
        CHECK(r.stats.states_pruned == 0);
    }
}

TEST_CASE("optimum never exceeds the plain shortest path") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance g = generate_instance(seed);
        auto r = solve_labelset(g);
        auto plain = plain_shortest_path(g);
        CHECK(r.optimal_length.has_value() == plain.has_value());
        if (r.reachable()) CHECK(*r.optimal_length <= *plain);
    }
}

TEST_CASE("witness always attains the reported optimum") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance g = generate_instance(seed);
        for (DominanceMode mode : kModes) {
            auto r = solve_labelset(g, mode);
            if (!r.reachable()) continue;
            CHECK(reuse_length(g, *r.witness) == *r.optimal_length);
        }
    }
}

TEST_CASE("decision threshold sits exactly at the optimum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance g = generate_instance(seed);
        auto r = solve_labelset(g);
        if (!r.reachable()) {
            CHECK_FALSE(decide(g, Budget{1000000}).yes);
            continue;
        }
        Weight opt = *r.optimal_length;
        for (DominanceMode mode : kModes) {
            auto at = decide(g, Budget{opt}, mode);
            CHECK(at.yes);
            REQUIRE(at.witness.has_value());
            CHECK(reuse_length(g, *at.witness) <= opt);
            if (opt > 0) {
                auto below = decide(g, Budget{opt - 1}, mode);
                CHECK_FALSE(below.yes);
                CHECK_FALSE(below.witness.has_value());
            }
        }
    }
}

TEST_CASE("decide is monotone in the budget") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Instance g = generate_instance(seed);
        bool prev = decide(g, Budget{0}).yes;
        for (Weight k = 1; k <= 30; ++k) {
            bool now = decide(g, Budget{k}).yes;
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("dominance reduces work on a reconverging mesh") {
    // Wide mesh with private labels: states at a vertex differ only in dead
    // labels, so full dominance collapses them.
    Instance g;
    const std::uint32_t kLayers = 7;
    g.vertex_count = 2 * kLayers + 2;
    g.source = 0;
    g.sink = 2 * kLayers + 1;
    Label next = 1;
    Vertex prev_a = 0, prev_b = 0;
    for (std::uint32_t i = 0; i < kLayers; ++i) {
        Vertex a = 2 * i + 1, b = 2 * i + 2;
        g.edges.push_back({prev_a, a, 1, next++});
        g.edges.push_back({prev_a, b, 1, next++});
        if (prev_b != prev_a) {
            g.edges.push_back({prev_b, a, 1, next++});
            g.edges.push_back({prev_b, b, 1, next++});
        }
        // One shared label per layer keeps the tracked-label set non-empty.
        g.edges.push_back({a, g.sink, 5, 500 + i});
        g.edges.push_back({b, g.sink, 5, 500 + i});
        prev_a = a;
        prev_b = b;
    }
    REQUIRE(validate_instance(g).ok());
    auto full = solve_labelset(g, DominanceMode::Full);
    auto off = solve_labelset(g, DominanceMode::Off);
    CHECK(full.optimal_length == off.optimal_length);
    CHECK(full.witness == off.witness);
    CHECK(full.stats.states_expanded < off.stats.states_expanded);
}
