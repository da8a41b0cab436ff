#include "bcs/split_solver.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "per_component.hpp"

namespace bcs {

SplitPartition split_partition(const ColoredGraph& g) {
    auto det = detect_split(g);
    if (!det) {
        throw BcsError(Err::not_split, "not_split: degree sequence fails the split test");
    }
    SplitPartition p;
    p.K = std::move(det->first);
    p.S = std::move(det->second);
    for (int v : p.K) (g.color(v) == Color::Red ? p.K_red : p.K_blue).push_back(v);
    for (int v : p.S) (g.color(v) == Color::Red ? p.S_red : p.S_blue).push_back(v);
    return p;
}

ColoredGraph prune_edges(const ColoredGraph& g, const SplitPartition& p) {
    const int n = g.vertex_count();
    // keep[u] = the single clique neighbor u's edges collapse to, or -1.
    std::vector<int> keep(n, -1);
    std::vector<char> in_K(n, 0);
    for (int v : p.K) in_K[v] = 1;
    for (int u : p.S) {
        for (int w : g.neighbors(u)) {
            if (in_K[w] && g.color(w) != g.color(u)) {
                keep[u] = w;  // neighbors are ascending, first hit is lowest
                break;
            }
        }
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        int s = -1, other_end = -1;
        if (!in_K[e.u]) {
            s = e.u;
            other_end = e.v;
        } else if (!in_K[e.v]) {
            s = e.v;
            other_end = e.u;
        }
        if (s >= 0 && keep[s] >= 0 && other_end != keep[s]) continue;
        edges.push_back(e);
    }
    return ColoredGraph(n, g.colors(), std::move(edges));
}

namespace {

Solution solve_split_connected(const ColoredGraph& g) {
    split_partition(g);  // validate the class before any shortcut

    const int n = g.vertex_count();
    if (g.blue_count() == g.red_count()) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return Solution::of(g, std::move(all));
    }
    if (g.blue_count() == 0 || g.red_count() == 0) return Solution{};

    // Work with blue as the strict minority; ids are unaffected by the swap.
    const bool swapped = g.red_count() < g.blue_count();
    const ColoredGraph work = swapped ? g.with_swapped_colors() : g;
    const int b = work.blue_count();
    const int r = work.red_count();
    const int k = r - b;

    SplitPartition p = split_partition(work);
    ColoredGraph pruned = prune_edges(work, p);

    std::vector<int> result;
    if (static_cast<int>(p.S_red.size()) >= k) {
        // Case 1: drop the k lowest-id majority-color independent vertices.
        std::vector<char> dropped(n, 0);
        for (int i = 0; i < k; ++i) dropped[p.S_red[i]] = 1;
        for (int v = 0; v < n; ++v) {
            if (!dropped[v]) result.push_back(v);
        }
    } else {
        // Case 2: all blues survive; pick |K_blue| + |S_blue| reds from the
        // clique, the kept neighbors of pruned independent blues first, padded
        // with the lowest clique reds.
        const int target = static_cast<int>(p.K_blue.size() + p.S_blue.size());
        assert(static_cast<int>(p.K_red.size()) > target);

        std::vector<char> in_K_red(n, 0);
        for (int v : p.K_red) in_K_red[v] = 1;
        std::set<int> X;
        for (int u : p.S_blue) {
            int cnt = 0;
            for (int w : pruned.neighbors(u)) {
                if (in_K_red[w]) {
                    ++cnt;
                    X.insert(w);
                }
            }
            assert(cnt <= 1);  // pruning left at most one opposite clique edge
        }
        assert(static_cast<int>(X.size()) <= target);
        for (int v : p.K_red) {
            if (static_cast<int>(X.size()) >= target) break;
            X.insert(v);
        }
        result.insert(result.end(), p.S_blue.begin(), p.S_blue.end());
        result.insert(result.end(), p.K_blue.begin(), p.K_blue.end());
        result.insert(result.end(), X.begin(), X.end());
    }

    Solution sol = Solution::of(g, std::move(result));
    if (sol.size() != 2 * std::min(g.blue_count(), g.red_count()) ||
        verify_solution(g, sol) != Verdict::ok) {
        throw BcsError(Err::internal, "solve_split: result failed self-verification");
    }
    return sol;
}

}  // namespace

Solution solve_split(const ColoredGraph& g) {
    return detail::best_over_components(g, solve_split_connected);
}

}  // namespace bcs
