#include <algorithm>

#include "doctest.h"

#include "bcs/diam2_solver.hpp"
#include "bcs/generate.hpp"
#include "bcs/oracle.hpp"
#include "bcs/prng.hpp"
#include "test_util.hpp"

using namespace bcs;
using testutil::make_graph;

TEST_CASE("common_neighbor") {
    ColoredGraph c4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(common_neighbor(c4, 0, 2) == 1);

    ColoredGraph star = make_graph("BRRR", {{0, 1}, {0, 2}, {0, 3}});
    CHECK(common_neighbor(star, 1, 2) == 0);

    ColoredGraph p4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}});
    try {
        common_neighbor(p4, 0, 3);
        CHECK(false);
    } catch (const BcsError& e) {
        CHECK(e.code() == Err::no_common_neighbor);
    }
    try {
        common_neighbor(p4, 0, 1);
        CHECK(false);
    } catch (const BcsError& e) {
        CHECK(e.code() == Err::adjacent_input);
    }
}

TEST_CASE("merge_blue_components") {
    // Blue subgraph already connected: nothing to add.
    ColoredGraph joined = make_graph("BBR", {{0, 1}, {1, 2}, {0, 2}});
    CHECK(merge_blue_components(joined) == std::vector<int>{0, 1});

    // Two isolated blues sharing a red hub.
    ColoredGraph hub = make_graph("BBR", {{0, 2}, {1, 2}});
    CHECK(merge_blue_components(hub) == std::vector<int>{0, 1, 2});

    // k blue singletons around one universal red: a single connector serves
    // every merge.
    ColoredGraph fan = make_graph("BBBBR", {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(merge_blue_components(fan) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("merge output stays within the 2b-1 bound") {
    Rng rng(107);
    for (int i = 0; i < 60; ++i) {
        int n = 2 + rng.below(29);
        ColoredGraph g = gen_diam2(n, 0.3, rng);
        if (g.blue_count() == 0 || g.blue_count() > g.red_count()) continue;
        std::vector<int> merged = merge_blue_components(g);
        CHECK(static_cast<int>(merged.size()) <= 2 * g.blue_count() - 1);
        CHECK(testutil::induced_connected(g, merged));
        for (int v = 0; v < n; ++v) {
            if (g.color(v) == Color::Blue) {
                CHECK(std::binary_search(merged.begin(), merged.end(), v));
            }
        }
    }
}

TEST_CASE("solve_diam2 spec examples") {
    ColoredGraph k4 = make_graph("RRBB", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Solution s = solve_diam2(k4);
    CHECK(s.size() == 4);

    ColoredGraph star = make_graph("BRRRRR", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    Solution s2 = solve_diam2(star);
    CHECK(s2.size() == 2);
    CHECK(s2.size() == oracle_bcs(star).size());

    // Wheel: blue hub 0, rim 1..7 with blues 1,2,3 and reds 4..7.
    std::vector<std::pair<int, int>> wheel;
    for (int i = 1; i <= 7; ++i) wheel.push_back({0, i});
    for (int i = 1; i < 7; ++i) wheel.push_back({i, i + 1});
    wheel.push_back({1, 7});
    ColoredGraph w = make_graph("BBBBRRRR", wheel);
    Solution s3 = solve_diam2(w);
    CHECK(s3.size() == 8);
    CHECK(s3.size() == oracle_bcs(w).size());
}

TEST_CASE("solve_diam2 rejects larger diameters") {
    ColoredGraph p4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(solve_diam2(p4), BcsError);
    try {
        solve_diam2(p4);
    } catch (const BcsError& e) {
        CHECK(e.code() == Err::not_diameter_2);
    }
}

TEST_CASE("solve_diam2 degenerate colorings") {
    CHECK(solve_diam2(make_graph("RRR", {{0, 1}, {1, 2}, {0, 2}})).size() == 0);
    CHECK(solve_diam2(make_graph("B", {})).size() == 0);
    // Balanced input: the whole graph comes back.
    ColoredGraph c4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(solve_diam2(c4).size() == 4);
}

TEST_CASE("solve_diam2 reaches 2*min on random instances") {
    Rng rng(109);
    for (int i = 0; i < 80; ++i) {
        int n = 2 + rng.below(59);
        double red_frac = rng.unit();
        ColoredGraph g = gen_diam2(n, red_frac, rng);
        Solution s = solve_diam2(g);
        CHECK(s.size() == 2 * std::min(g.red_count(), g.blue_count()));
        CHECK(verify_solution(g, s) == Verdict::ok);
    }
}

TEST_CASE("solve_diam2 matches the oracle on small instances") {
    Rng rng(113);
    for (int i = 0; i < 60; ++i) {
        int n = 2 + rng.below(11);
        ColoredGraph g = gen_diam2(n, 0.5, rng);
        CHECK(solve_diam2(g).size() == oracle_bcs(g).size());
    }
}

TEST_CASE("solve_diam2 works per component") {
    // A star plus an all-blue edge; only the star has balanced pairs.
    ColoredGraph g = make_graph("BRRRBB", {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
    Solution s = solve_diam2(g);
    CHECK(s.size() == 2);
    CHECK(s.vertices == std::vector<int>{0, 1});

    ColoredGraph g2 = make_graph("BRRRBRR", {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {5, 6}});
    Solution s2 = solve_diam2(g2);
    CHECK(s2.size() == 2);
    CHECK(s2.vertices == std::vector<int>{0, 1});
}
