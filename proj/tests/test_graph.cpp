#include <algorithm>

#include "doctest.h"

#include "bcs/generate.hpp"
#include "bcs/graph.hpp"
#include "bcs/io.hpp"
#include "bcs/prng.hpp"
#include "test_util.hpp"

using namespace bcs;
using testutil::make_graph;

TEST_CASE("parse_graph accepts the minimal forms") {
    ColoredGraph g = parse_graph("p bcs 2 1\nv 0 R\nv 1 B\ne 0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.red_count() == 1);
    CHECK(g.blue_count() == 1);
    CHECK(g.has_edge(0, 1));

    ColoredGraph single = parse_graph("p bcs 1 0\nv 0 R\n");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);
    CHECK(single.color(0) == Color::Red);
}

TEST_CASE("parse_graph skips comments and tolerates CRLF") {
    ColoredGraph g = parse_graph("c header comment\np bcs 1 0\r\nc mid\nv 0 B\r\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.color(0) == Color::Blue);
}

TEST_CASE("parse_graph reports errors with line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("p bcs 2 1\nv 0 R\nv 1 B\ne 0 0\n") == 4);   // self-loop
    CHECK(line_of("p wrong 1 0\nv 0 R\n") == 1);               // bad header
    CHECK(line_of("p bcs 1 0\nv 0 X\n") == 2);                 // unknown color
    CHECK(line_of("p bcs 2 0\nv 0 R\nv 0 B\n") == 3);          // duplicate id
    CHECK(line_of("p bcs 2 1\nv 0 R\nv 1 B\ne 0 5\n") == 4);   // endpoint range
    CHECK(line_of("p bcs 2 2\nv 0 R\nv 1 B\ne 0 1\ne 1 0\n") == 5);  // dup edge
    CHECK_THROWS_AS(parse_graph("p bcs 2 1\nv 0 R\nv 1 B\n"), ParseError);  // missing edge
}

TEST_CASE("serialize -> parse is the identity") {
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        ColoredGraph g = gen_random(1 + rng.below(20), 0.5, rng);
        std::string text = serialize_graph(g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("self-loops and parallel edges are rejected at construction") {
    CHECK_THROWS_AS(make_graph("RB", {{0, 0}}), BcsError);
    CHECK_THROWS_AS(make_graph("RB", {{0, 1}, {1, 0}}), BcsError);
    CHECK_THROWS_AS(make_graph("RB", {{0, 2}}), BcsError);
}

TEST_CASE("adjacency lists are sorted and symmetric") {
    ColoredGraph g = make_graph("RBRB", {{2, 0}, {3, 0}, {0, 1}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
    CHECK(g.neighbors(2) == std::vector<int>{0});
    CHECK(g.degree(0) == 3);
}

TEST_CASE("verify_solution verdicts") {
    ColoredGraph path2 = make_graph("RB", {{0, 1}});
    CHECK(verify_solution(path2, std::vector<int>{0, 1}) == Verdict::ok);

    ColoredGraph tri = make_graph("RRB", {{0, 1}, {1, 2}, {0, 2}});
    CHECK(verify_solution(tri, std::vector<int>{0, 1, 2}) == Verdict::not_balanced);

    ColoredGraph path4 = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}});
    CHECK(verify_solution(path4, std::vector<int>{0, 3}) == Verdict::not_connected);

    CHECK(verify_solution(path2, std::vector<int>{0, 7}) == Verdict::not_subset);
    CHECK(verify_solution(path2, std::vector<int>{0, 0}) == Verdict::not_subset);
}

TEST_CASE("the empty solution is ok on every graph") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        ColoredGraph g = gen_random(1 + rng.below(15), 0.4, rng);
        CHECK(verify_solution(g, std::vector<int>{}) == Verdict::ok);
    }
}

TEST_CASE("Solution::of computes counts and sorts") {
    ColoredGraph g = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}});
    Solution s = Solution::of(g, {3, 0});
    CHECK(s.vertices == std::vector<int>{0, 3});
    CHECK(s.red_count == 1);
    CHECK(s.blue_count == 1);
    CHECK(s.balanced());
}

TEST_CASE("is_connected") {
    CHECK(is_connected(make_graph("R", {})));
    CHECK_FALSE(is_connected(make_graph("RB", {})));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        CHECK(is_connected(gen_tree(1 + rng.below(30), 0.5, rng)));
    }
}

TEST_CASE("connected_components are sorted by smallest member") {
    ColoredGraph g = make_graph("RBRBR", {{1, 3}, {0, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 4});
    CHECK(comps[1] == std::vector<int>{1, 3});
    CHECK(comps[2] == std::vector<int>{2});
}

TEST_CASE("classify on K4 all red") {
    ColoredGraph k4 = make_graph("RRRR", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ClassReport r = classify(k4);
    CHECK(r.split);
    CHECK(r.split_S.empty());
    CHECK(r.diameter_le_2);
    CHECK_FALSE(r.proper_bipartite);
    REQUIRE(r.monochromatic_edge.has_value());
}

TEST_CASE("classify on the path R-B-R-B") {
    ColoredGraph p = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}});
    ClassReport r = classify(p);
    CHECK(r.tree);
    CHECK(r.proper_bipartite);
    CHECK_FALSE(r.diameter_le_2);  // distance(0, 3) = 3
}

TEST_CASE("classify on a star: all four flags") {
    ColoredGraph star = make_graph("BRRR", {{0, 1}, {0, 2}, {0, 3}});
    ClassReport r = classify(star);
    CHECK(r.connected);
    CHECK(r.tree);
    CHECK(r.split);
    CHECK(r.proper_bipartite);
    CHECK(r.diameter_le_2);
}

TEST_CASE("detect_split witnesses") {
    // Star: any edge is a 2-clique; ties move the lowest-id leaf into K.
    ColoredGraph star = make_graph("BRRR", {{0, 1}, {0, 2}, {0, 3}});
    auto w = detect_split(star);
    REQUIRE(w.has_value());
    CHECK(w->first == std::vector<int>{0, 1});
    CHECK(w->second == std::vector<int>{2, 3});

    ColoredGraph tri_pendant = make_graph("RRBB", {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto w2 = detect_split(tri_pendant);
    REQUIRE(w2.has_value());
    CHECK(w2->first == std::vector<int>{0, 1, 2});
    CHECK(w2->second == std::vector<int>{3});

    CHECK_FALSE(detect_split(make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));  // C4
    CHECK_FALSE(detect_split(make_graph("RBRBR", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})));
}

TEST_CASE("classify witnesses re-verify on random split graphs") {
    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        ColoredGraph g = gen_split(2 + rng.below(25), 0.5, rng);
        ClassReport r = classify(g);
        REQUIRE(r.split);
        for (std::size_t a = 0; a < r.split_K.size(); ++a) {
            for (std::size_t b = a + 1; b < r.split_K.size(); ++b) {
                CHECK(g.has_edge(r.split_K[a], r.split_K[b]));
            }
        }
        for (std::size_t a = 0; a < r.split_S.size(); ++a) {
            for (std::size_t b = a + 1; b < r.split_S.size(); ++b) {
                CHECK_FALSE(g.has_edge(r.split_S[a], r.split_S[b]));
            }
        }
    }
}

TEST_CASE("has_diameter_le_2") {
    CHECK(has_diameter_le_2(make_graph("BRRR", {{0, 1}, {0, 2}, {0, 3}})));
    CHECK_FALSE(has_diameter_le_2(make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(has_diameter_le_2(make_graph("RB", {})));  // disconnected
    CHECK(has_diameter_le_2(make_graph("R", {})));
}

TEST_CASE("solution file round-trip") {
    ColoredGraph g = make_graph("RBRB", {{0, 1}, {1, 2}, {2, 3}});
    Solution s = Solution::of(g, {0, 1, 2, 3});
    std::string text = serialize_solution(s);
    CHECK(text == "s 4\nl 0\nl 1\nl 2\nl 3\n");
    CHECK(parse_solution(text) == s.vertices);
    CHECK(parse_solution("s 0\n").empty());
    CHECK_THROWS_AS(parse_solution("s 2\nl 1\nl 0\n"), ParseError);  // not ascending
    CHECK_THROWS_AS(parse_solution("s 2\nl 0\n"), ParseError);       // count mismatch
}
