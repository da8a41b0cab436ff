#include "bcs/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcs {

int PairSet::entry_count() const {
    int c = 0;
    for (int r : red) {
        if (r != kAbsent) ++c;
    }
    return c;
}

std::vector<std::pair<int, int>> PairSet::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(red.size()); ++i) {
        if (red[i] != kAbsent) out.emplace_back(red[i], red[i] + min_key + i);
    }
    return out;
}

namespace {

// Minkowski sum; when pick is non-null, records for every result key the
// first (a_key, b_key) combination attaining the kept maximum, scanning a's
// keys then b's keys in ascending order.
PairSet sum_with_pick(const PairSet& a, const PairSet& b,
                      std::vector<std::pair<int, int>>* pick) {
    PairSet out;
    out.min_key = a.key_lo() + b.key_lo();
    out.red.assign(a.red.size() + b.red.size() - 1, PairSet::kAbsent);
    if (pick) pick->assign(out.red.size(), {0, 0});
    for (int ia = 0; ia < static_cast<int>(a.red.size()); ++ia) {
        if (a.red[ia] == PairSet::kAbsent) continue;
        for (int ib = 0; ib < static_cast<int>(b.red.size()); ++ib) {
            if (b.red[ib] == PairSet::kAbsent) continue;
            const int io = ia + ib;
            const int cand = a.red[ia] + b.red[ib];
            if (cand > out.red[io]) {
                out.red[io] = cand;
                if (pick) {
                    (*pick)[io] = {a.min_key + ia, b.min_key + ib};
                }
            }
        }
    }
    return out;
}

PairSet shift_and_add_empty(const PairSet& folded, Color c) {
    // Including the vertex shifts every pair by its color; the bare (0,0)
    // option (vertex dropped) is merged back in, losing to any real entry.
    PairSet out;
    const int delta = c == Color::Red ? -1 : 1;
    const int shifted_lo = folded.key_lo() + delta;
    const int shifted_hi = folded.key_hi() + delta;
    out.min_key = std::min(shifted_lo, 0);
    out.red.assign(std::max(shifted_hi, 0) - out.min_key + 1, PairSet::kAbsent);
    for (int i = 0; i < static_cast<int>(folded.red.size()); ++i) {
        if (folded.red[i] == PairSet::kAbsent) continue;
        const int key = folded.min_key + i + delta;
        out.red[key - out.min_key] = folded.red[i] + (c == Color::Red ? 1 : 0);
    }
    int& at_zero = out.red[-out.min_key];
    at_zero = std::max(at_zero, 0);
    return out;
}

const PairSet kUnit{0, {0}};  // {(0,0)}

}  // namespace

PairSet pairset_leaf(Color c) { return shift_and_add_empty(kUnit, c); }

PairSet minkowski_sum(const PairSet& a, const PairSet& b) {
    return sum_with_pick(a, b, nullptr);
}

PairSet pairset_internal(const std::vector<PairSet>& children, Color c) {
    PairSet folded = kUnit;
    for (const PairSet& child : children) folded = sum_with_pick(folded, child, nullptr);
    return shift_and_add_empty(folded, c);
}

RootedTree rooted_tree(const ColoredGraph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) {
        throw BcsError(Err::invalid_instance, "rooted_tree: root out of range");
    }
    RootedTree t;
    t.n = n;
    t.root = root;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    std::vector<int> stack{root};
    std::vector<int> pre;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        pre.push_back(v);
        for (int w : g.neighbors(v)) {
            if (w == t.parent[v]) continue;
            if (seen[w]) {
                throw BcsError(Err::not_a_tree,
                               "not_a_tree: cycle through edge (" + std::to_string(v) +
                                   "," + std::to_string(w) + ")");
            }
            seen[w] = 1;
            t.parent[w] = v;
            t.children[v].push_back(w);
            stack.push_back(w);
        }
        std::sort(t.children[v].begin(), t.children[v].end());
    }
    t.post_order.assign(pre.rbegin(), pre.rend());
    return t;
}

TreeDp TreeDp::run(const ColoredGraph& g, const RootedTree& t) {
    TreeDp dp;
    dp.nodes_.resize(t.n);
    for (int v : t.post_order) {
        Node& node = dp.nodes_[v];
        node.children = t.children[v];
        node.color = g.color(v);
        node.folds.reserve(node.children.size());
        PairSet folded = kUnit;
        for (int child : node.children) {
            Fold fold;
            folded = sum_with_pick(folded, dp.nodes_[child].pv, &fold.pick);
            fold.min_key = folded.min_key;
            node.folds.push_back(std::move(fold));
        }
        node.pv = shift_and_add_empty(folded, node.color);
    }
    return dp;
}

std::vector<int> TreeDp::reconstruct(int v, int key) const {
    const Node& node = nodes_[v];
    const int r = node.pv.red_at(key);
    assert(r != PairSet::kAbsent);
    if (key == 0 && r == 0) return {};

    std::vector<int> verts{v};
    // Undo the color shift, then walk the fold picks right to left.
    int fk = key + (node.color == Color::Red ? 1 : -1);
    for (int i = static_cast<int>(node.folds.size()) - 1; i >= 0; --i) {
        const Fold& fold = node.folds[i];
        const auto [prefix_key, child_key] = fold.pick[fk - fold.min_key];
        const std::vector<int> sub = reconstruct(node.children[i], child_key);
        verts.insert(verts.end(), sub.begin(), sub.end());
        fk = prefix_key;
    }
    assert(fk == 0);
    return verts;
}

Solution solve_rooted(const ColoredGraph& g, const RootedTree& t) {
    TreeDp dp = TreeDp::run(g, t);
    return Solution::of(g, dp.reconstruct(t.root, 0));
}

Solution solve_rooted(const ColoredGraph& g, int root) {
    return solve_rooted(g, rooted_tree(g, root));
}

namespace {

// Cycle check over every component, so the parallel per-root loop below never
// needs to throw from inside an OpenMP region.
void require_forest(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                if (parent[w] != -2) {
                    throw BcsError(Err::not_a_tree,
                                   "not_a_tree: cycle through edge (" + std::to_string(v) +
                                       "," + std::to_string(w) + ")");
                }
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
}

struct RootCandidate {
    Solution sol;
    int root = -1;

    bool beats(const RootCandidate& o) const {
        if (root < 0) return false;
        if (o.root < 0) return true;
        if (sol.size() != o.sol.size()) return sol.size() > o.sol.size();
        if (root != o.root) return root < o.root;
        return sol.vertices < o.sol.vertices;
    }
};

RootCandidate best_root_in_range(const ColoredGraph& g, int lo, int hi) {
    RootCandidate best;
    for (int root = lo; root < hi; ++root) {
        RootCandidate cand{solve_rooted(g, root), root};
        if (cand.beats(best)) best = cand;
    }
    return best;
}

}  // namespace

Solution solve_tree(const ColoredGraph& g, int threads) {
    const int n = g.vertex_count();
    if (n == 0) return Solution{};
    require_forest(g);

    RootCandidate best;
#ifdef _OPENMP
    int want = threads;
    if (want <= 0) want = omp_get_max_threads();
    if (want > 1) {
        std::vector<RootCandidate> local(want);
#pragma omp parallel for num_threads(want) schedule(dynamic, 8)
        for (int root = 0; root < n; ++root) {
            const int tid = omp_get_thread_num();
            RootCandidate cand{solve_rooted(g, root), root};
            if (cand.beats(local[tid])) local[tid] = cand;
        }
        for (const RootCandidate& cand : local) {
            if (cand.beats(best)) best = cand;
        }
        if (verify_solution(g, best.sol) != Verdict::ok) {
            throw BcsError(Err::internal, "solve_tree: result failed self-verification");
        }
        return best.sol;
    }
#else
    (void)threads;
#endif
    best = best_root_in_range(g, 0, n);
    if (verify_solution(g, best.sol) != Verdict::ok) {
        throw BcsError(Err::internal, "solve_tree: result failed self-verification");
    }
    return best.sol;
}

}  // namespace bcs
