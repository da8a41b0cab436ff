#include "bcs/diam2_solver.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "per_component.hpp"

namespace bcs {

int common_neighbor(const ColoredGraph& g, int u, int v) {
    assert(u != v);
    if (g.has_edge(u, v)) {
        throw BcsError(Err::adjacent_input, "adjacent_input: (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") is an edge");
    }
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return a[i];
        if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    throw BcsError(Err::no_common_neighbor, "no_common_neighbor: vertices " + std::to_string(u) +
                                                " and " + std::to_string(v) +
                                                " are at distance > 2");
}

namespace {

// Union-find over vertex ids, tracking each component's minimum member.
struct Dsu {
    std::vector<int> parent, min_member;

    explicit Dsu(int n) : parent(n), min_member(n) {
        for (int i = 0; i < n; ++i) parent[i] = min_member[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    // Returns the surviving root.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        min_member[a] = std::min(min_member[a], min_member[b]);
        return a;
    }
};

}  // namespace

std::vector<int> merge_blue_components(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    std::vector<int> blues;
    for (int v = 0; v < n; ++v) {
        if (g.color(v) == Color::Blue) {
            in_set[v] = 1;
            blues.push_back(v);
        }
    }

    Dsu dsu(n);
    for (const Edge& e : g.edges()) {
        if (in_set[e.u] && in_set[e.v]) dsu.unite(e.u, e.v);
    }
    // Components of the current induced subgraph, keyed by their minimum
    // member (which is also the representative handed to common_neighbor).
    std::set<int> comps;
    for (int v : blues) {
        int r = dsu.find(v);
        comps.insert(dsu.min_member[r]);
    }

    std::vector<int> added;
    const int initial = static_cast<int>(comps.size());
    while (comps.size() > 1) {
        int u = *comps.begin();
        int v = *std::next(comps.begin());
        int w = common_neighbor(g, u, v);  // u,v in distinct components, never adjacent
        if (in_set[w] || g.color(w) != Color::Red) {
            // A blue or already-selected common neighbor would have joined the
            // two components before this round.
            throw BcsError(Err::internal, "merge_blue_components: connector invariant violated");
        }
        in_set[w] = 1;
        added.push_back(w);
        int root = dsu.find(w);
        for (int x : g.neighbors(w)) {
            if (!in_set[x]) continue;
            comps.erase(dsu.min_member[dsu.find(x)]);
            root = dsu.unite(root, x);
        }
        comps.insert(dsu.min_member[root]);
    }
    assert(static_cast<int>(added.size()) <= std::max(0, initial - 1));

    std::vector<int> out = std::move(blues);
    out.insert(out.end(), added.begin(), added.end());
    std::sort(out.begin(), out.end());
    assert(out.empty() ||
           static_cast<int>(out.size()) <= 2 * g.blue_count() - 1);
    return out;
}

namespace {

Solution solve_diam2_connected(const ColoredGraph& g) {
    if (!has_diameter_le_2(g)) {
        throw BcsError(Err::not_diameter_2, "not_diameter_2: some pair is at distance > 2");
    }

    // Work with blue as the minority; ids are unaffected by the swap.
    const bool swapped = g.red_count() < g.blue_count();
    const ColoredGraph work = swapped ? g.with_swapped_colors() : g;
    const int b = work.blue_count();

    std::vector<int> picked = merge_blue_components(work);
    std::vector<char> in_set(work.vertex_count(), 0);
    int reds_in = 0;
    for (int v : picked) {
        in_set[v] = 1;
        reds_in += work.color(v) == Color::Red;
    }

    // Phase 2: grow with the lowest-id adjacent red until balanced.  Every
    // vertex outside the set is red, so connectivity of g keeps the frontier
    // nonempty while a deficit remains.
    std::set<int> frontier;
    for (int v : picked) {
        for (int w : work.neighbors(v)) {
            if (!in_set[w]) frontier.insert(w);
        }
    }
    while (reds_in < b) {
        if (frontier.empty()) {
            throw BcsError(Err::internal, "solve_diam2: red deficit with empty frontier");
        }
        int v = *frontier.begin();
        frontier.erase(frontier.begin());
        assert(work.color(v) == Color::Red);
        in_set[v] = 1;
        picked.push_back(v);
        ++reds_in;
        for (int w : work.neighbors(v)) {
            if (!in_set[w]) frontier.insert(w);
        }
    }

    Solution sol = Solution::of(g, std::move(picked));
    if (sol.size() != 2 * std::min(g.blue_count(), g.red_count()) ||
        verify_solution(g, sol) != Verdict::ok) {
        throw BcsError(Err::internal, "solve_diam2: result failed self-verification");
    }
    return sol;
}

}  // namespace

Solution solve_diam2(const ColoredGraph& g) {
    return detail::best_over_components(g, solve_diam2_connected);
}

}  // namespace bcs
