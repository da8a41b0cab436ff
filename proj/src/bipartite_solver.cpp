#include "bcs/bipartite_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <string>

#include "per_component.hpp"

namespace bcs {

std::vector<Edge> spanning_tree(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> tree;
    if (n == 0) return tree;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            tree.push_back(Edge{std::min(v, w), std::max(v, w)});
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != n) {
        throw BcsError(Err::not_connected, "spanning_tree: graph is not connected");
    }
    return tree;
}

int find_majority_leaf(const std::vector<std::vector<int>>& tree_adj,
                       const std::vector<char>& alive, const ColoredGraph& g, Color color) {
    const int n = static_cast<int>(tree_adj.size());
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || g.color(v) != color) continue;
        int deg = 0;
        for (int w : tree_adj[v]) deg += alive[w];
        if (deg <= 1) return v;
    }
    throw BcsError(Err::no_majority_leaf, "find_majority_leaf: no removable leaf of color " +
                                              std::string(1, color_char(color)));
}

namespace {

Solution solve_bipartite_connected(const ColoredGraph& g) {
    const int n = g.vertex_count();
    int surplus = g.red_count() - g.blue_count();
    const Color majority = surplus >= 0 ? Color::Red : Color::Blue;
    surplus = std::abs(surplus);

    std::vector<Edge> tree = spanning_tree(g);
    std::vector<std::vector<int>> tree_adj(n);
    for (const Edge& e : tree) {
        tree_adj[e.u].push_back(e.v);
        tree_adj[e.v].push_back(e.u);
    }

    // Peel one majority-color leaf of the spanning tree per round.  Removing a
    // leaf keeps the tree (hence the subgraph) connected.  A properly colored
    // tree with more red than blue always has a red leaf: if all leaves were
    // blue, rooting at a blue leaf and mapping every (internal) red vertex to
    // one of its children -- blue, by properness -- would inject red into
    // blue-minus-root, forcing |R| < |B|.
    std::vector<char> alive(n, 1);
    int alive_count = n;
    int alive_edges = static_cast<int>(tree.size());
    for (int round = 0; round < surplus; ++round) {
        int v = find_majority_leaf(tree_adj, alive, g, majority);
        int deg = 0;
        for (int w : tree_adj[v]) deg += alive[w];
        alive[v] = 0;
        --alive_count;
        alive_edges -= deg;
        // a peeled leaf always leaves a smaller tree behind
        assert(deg <= 1);
        assert(alive_edges == std::max(0, alive_count - 1));
    }
    (void)alive_edges;

    std::vector<int> verts;
    verts.reserve(alive_count);
    for (int v = 0; v < n; ++v) {
        if (alive[v]) verts.push_back(v);
    }
    Solution sol = Solution::of(g, std::move(verts));
    if (sol.size() != 2 * std::min(g.blue_count(), g.red_count()) ||
        verify_solution(g, sol) != Verdict::ok) {
        throw BcsError(Err::internal, "solve_bipartite_proper: result failed self-verification");
    }
    return sol;
}

}  // namespace

Solution solve_bipartite_proper(const ColoredGraph& g) {
    for (const Edge& e : g.edges()) {
        if (g.color(e.u) == g.color(e.v)) {
            throw BcsError(Err::not_proper_coloring,
                           "not_proper_coloring: edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ") is monochromatic");
        }
    }
    return detail::best_over_components(g, solve_bipartite_connected);
}

}  // namespace bcs
