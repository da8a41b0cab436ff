#include <algorithm>

#include "doctest.h"

#include "bcs/generate.hpp"
#include "bcs/oracle.hpp"
#include "bcs/prng.hpp"
#include "bcs/split_solver.hpp"
#include "test_util.hpp"

using namespace bcs;
using testutil::make_graph;

TEST_CASE("split_partition witnesses") {
    ColoredGraph k3 = make_graph("RRB", {{0, 1}, {1, 2}, {0, 2}});
    SplitPartition p = split_partition(k3);
    CHECK(p.K == std::vector<int>{0, 1, 2});
    CHECK(p.S.empty());
    CHECK(p.K_red == std::vector<int>{0, 1});
    CHECK(p.K_blue == std::vector<int>{2});

    ColoredGraph star = make_graph("BRRR", {{0, 1}, {0, 2}, {0, 3}});
    SplitPartition ps = split_partition(star);
    CHECK(ps.K == std::vector<int>{0, 1});
    CHECK(ps.S == std::vector<int>{2, 3});

    ColoredGraph tri_pendant = make_graph("RRBB", {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    SplitPartition pt = split_partition(tri_pendant);
    CHECK(pt.K == std::vector<int>{0, 1, 2});
    CHECK(pt.S == std::vector<int>{3});

    ColoredGraph c4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(split_partition(c4), BcsError);
    try {
        split_partition(c4);
    } catch (const BcsError& e) {
        CHECK(e.code() == Err::not_split);
    }
}

TEST_CASE("prune_edges keeps one edge into the opposite-color clique side") {
    // Clique K = {1..5} all red, S = {0} blue adjacent to 3 and 5.
    std::vector<std::pair<int, int>> edges = {{0, 3}, {0, 5}};
    for (int u = 1; u <= 5; ++u) {
        for (int v = u + 1; v <= 5; ++v) edges.push_back({u, v});
    }
    ColoredGraph g = make_graph("BRRRRR", edges);
    SplitPartition p = split_partition(g);
    REQUIRE(p.S == std::vector<int>{0});

    ColoredGraph pruned = prune_edges(g, p);
    CHECK(pruned.has_edge(0, 3));
    CHECK_FALSE(pruned.has_edge(0, 5));
    // Clique edges untouched.
    for (int u = 1; u <= 5; ++u) {
        for (int v = u + 1; v <= 5; ++v) CHECK(pruned.has_edge(u, v));
    }
}

TEST_CASE("prune_edges leaves same-color attachments alone") {
    // S vertex 3 (blue) attached only to blue clique vertices.
    ColoredGraph g = make_graph("BBBB", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}});
    SplitPartition p = split_partition(g);
    ColoredGraph pruned = prune_edges(g, p);
    CHECK(pruned.edge_count() == g.edge_count());

    ColoredGraph k3 = make_graph("RRB", {{0, 1}, {1, 2}, {0, 2}});
    CHECK(prune_edges(k3, split_partition(k3)).edge_count() == 3);  // S empty
}

TEST_CASE("solve_split spec examples") {
    // K4 balanced: the whole graph.
    ColoredGraph k4 = make_graph("RRBB", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Solution s = solve_split(k4);
    CHECK(s.size() == 4);
    CHECK(s.vertices == std::vector<int>{0, 1, 2, 3});

    // Clique of 5 red + 1 blue: min is 1 of each.
    std::vector<std::pair<int, int>> k6;
    for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) k6.push_back({u, v});
    }
    ColoredGraph clique = make_graph("RRRRRB", k6);
    Solution s2 = solve_split(clique);
    CHECK(s2.size() == 2);
    CHECK(s2.size() == oracle_bcs(clique).size());

    // Case 2: K = 4 red, two independent blues each pinned to one red.
    std::vector<std::pair<int, int>> case2 = {{4, 0}, {5, 1}};
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) case2.push_back({u, v});
    }
    ColoredGraph g2 = make_graph("RRRRBB", case2);
    Solution s3 = solve_split(g2);
    CHECK(s3.size() == 4);
    CHECK(s3.vertices == std::vector<int>{0, 1, 4, 5});
    CHECK(s3.size() == oracle_bcs(g2).size());
}

TEST_CASE("solve_split reaches 2*min on random split graphs") {
    Rng rng(89);
    for (int i = 0; i < 80; ++i) {
        int n = 2 + rng.below(59);
        double red_frac = rng.unit();
        ColoredGraph g = gen_split(n, red_frac, rng);
        Solution s = solve_split(g);
        CHECK(s.size() == 2 * std::min(g.red_count(), g.blue_count()));
        CHECK(verify_solution(g, s) == Verdict::ok);
    }
}

TEST_CASE("solve_split matches the oracle on small split graphs") {
    Rng rng(97);
    for (int i = 0; i < 60; ++i) {
        ColoredGraph g = gen_split(2 + rng.below(11), 0.5, rng);
        CHECK(solve_split(g).size() == oracle_bcs(g).size());
    }
}

TEST_CASE("solve_split works per component") {
    // Two disjoint triangles; the union is not split (it contains 2K2), but
    // every component is.
    ColoredGraph g = make_graph("RBBRRB",
                                {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_AS(split_partition(g), BcsError);  // whole graph
    Solution s = solve_split(g);
    CHECK(s.size() == 2);
    CHECK(s.vertices == std::vector<int>{0, 1});  // lex-smallest of the ties

    // A component that is not split still fails.
    ColoredGraph bad = make_graph("RBRBRB",
                                  {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
    CHECK_THROWS_AS(solve_split(bad), BcsError);
}

TEST_CASE("solve_split with b == r still validates splitness") {
    ColoredGraph c4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(solve_split(c4), BcsError);
}

TEST_CASE("solve_split handles an absent color") {
    ColoredGraph all_red = make_graph("RRR", {{0, 1}, {1, 2}, {0, 2}});
    CHECK(solve_split(all_red).size() == 0);
}
