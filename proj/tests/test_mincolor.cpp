#include "doctest.h"

#include "error.hpp"
#include "generate.hpp"
#include "instance.hpp"
#include "mincolor.hpp"
#include "solver.hpp"

using namespace reusesp;

TEST_CASE("single color chain needs one color") {
    Instance colored{3, {{0, 1, 7, 4}, {1, 2, 9, 4}}, 0, 2};
    auto g = reduce_mincolor(colored);
    auto r = solve_labelset(g);
    REQUIRE(r.reachable());
    CHECK(*r.optimal_length == 1);
    CHECK(min_color_count_bruteforce(colored) == std::uint64_t{1});
}

TEST_CASE("distinct colors cost one each") {
    Instance colored{4, {{0, 1, 1, 1}, {1, 2, 1, 2}, {2, 3, 1, 3}}, 0, 3};
    auto r = solve_labelset(reduce_mincolor(colored));
    CHECK(*r.optimal_length == 3);
}

TEST_CASE("the two-color route beats the shorter three-color route") {
    // The repeated-color route takes more edges but a smaller palette.
    Instance colored{5,
                     {{0, 1, 1, 5}, {1, 2, 1, 5}, {2, 4, 1, 6},
                      {0, 3, 1, 1}, {3, 4, 1, 2}},
                     0, 4};
    auto g = reduce_mincolor(colored);
    auto r = solve_labelset(g);
    CHECK(*r.optimal_length == 2);
    CHECK(*r.witness == PathTrace{{0, 1, 2}});
    CHECK(min_color_count_bruteforce(colored) == std::uint64_t{2});
}

TEST_CASE("reduction forces unit weights and keeps labels") {
    Instance colored{3, {{0, 1, 7, 4}, {1, 2, 9, 8}}, 0, 2};
    auto g = reduce_mincolor(colored);
    REQUIRE(g.edges.size() == colored.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(g.edges[i].weight == 1);
        CHECK(g.edges[i].label == colored.edges[i].label);
        CHECK(g.edges[i].tail == colored.edges[i].tail);
        CHECK(g.edges[i].head == colored.edges[i].head);
    }
    CHECK(validate_instance(g).ok());
}

TEST_CASE("input weights do not influence the answer") {
    Instance cheap{3, {{0, 1, 1, 4}, {1, 2, 1, 8}}, 0, 2};
    Instance pricey = cheap;
    pricey.edges[0].weight = 1000;
    pricey.edges[1].weight = 2000;
    auto a = solve_labelset(reduce_mincolor(cheap));
    auto b = solve_labelset(reduce_mincolor(pricey));
    CHECK(a.optimal_length == b.optimal_length);
    CHECK(*a.optimal_length == 2);
}

TEST_CASE("reduction rejects structurally broken input") {
    Instance cyclic{2, {{0, 1, 1, 1}, {1, 0, 1, 2}}, 0, 1};
    CHECK_THROWS_AS(reduce_mincolor(cyclic), Error);
}

TEST_CASE("unreachable sink stays unreachable") {
    Instance colored{3, {{0, 1, 1, 1}}, 0, 2};
    CHECK_FALSE(min_color_count_bruteforce(colored).has_value());
    CHECK_FALSE(solve_labelset(reduce_mincolor(colored)).reachable());
}

TEST_CASE("solver agrees with the exhaustive color count") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance colored = generate_colored(seed);
        auto oracle = min_color_count_bruteforce(colored);
        auto r = solve_labelset(reduce_mincolor(colored));
        REQUIRE(oracle.has_value() == r.reachable());
        if (oracle.has_value()) CHECK(*oracle == *r.optimal_length);
    }
}
