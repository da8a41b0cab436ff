#pragma once

#include <utility>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

// Set of (red, blue) count pairs achievable by subtrees hanging below a
// vertex, keyed by the difference blue - red and pruned to the componentwise
// largest pair per key (at fixed difference, larger red means larger blue, so
// one int per key suffices). Keys are stored densely; kAbsent marks holes.
struct PairSet {
    static constexpr int kAbsent = -1;

    int min_key = 0;
    std::vector<int> red;  // red[i] = max red count at key min_key + i

    int key_lo() const { return min_key; }
    int key_hi() const { return min_key + static_cast<int>(red.size()) - 1; }
    bool contains(int key) const { return red_at(key) != kAbsent; }
    int red_at(int key) const {
        if (key < key_lo() || key > key_hi()) return kAbsent;
        return red[key - min_key];
    }
    int entry_count() const;
    // (red, blue) pairs in key order, for inspection.
    std::vector<std::pair<int, int>> pairs() const;

    friend bool operator==(const PairSet&, const PairSet&) = default;
};

// {(0,0), (1,0)} for a red leaf, {(0,0), (0,1)} for a blue one.
PairSet pairset_leaf(Color c);

// All pairwise sums, pruned per key. O(|a| * |b|).
PairSet minkowski_sum(const PairSet& a, const PairSet& b);

// Folds the children's sets (in the given order), accounts for the vertex's
// own color, and keeps the empty option. Every entry except (0,0) at key 0
// describes a subtree that includes the vertex itself.
PairSet pairset_internal(const std::vector<PairSet>& children, Color c);

// Arborescence over one connected component of a graph. Children are listed
// in ascending id order; post_order covers exactly the root's component.
struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;  // -1 for the root and for vertices outside the component
    std::vector<std::vector<int>> children;
    std::vector<int> post_order;
};

// Roots the component containing `root`. Throws not_a_tree, naming a cycle
// edge, if that component is not acyclic.
RootedTree rooted_tree(const ColoredGraph& g, int root);

// The full dynamic program with enough bookkeeping to rebuild a witness
// subtree for any stored pair.
class TreeDp {
public:
    static TreeDp run(const ColoredGraph& g, const RootedTree& t);

    const PairSet& pairset(int v) const { return nodes_[v].pv; }

    // Vertex set of a subtree rooted at v realizing the entry at `key`.
    // Includes v unless the entry is (0,0) at key 0.
    std::vector<int> reconstruct(int v, int key) const;

private:
    struct Fold {
        int min_key = 0;
        std::vector<std::pair<int, int>> pick;  // per key: (prefix key, child key)
    };
    struct Node {
        std::vector<int> children;
        std::vector<Fold> folds;
        PairSet pv;
        Color color = Color::Red;
    };
    std::vector<Node> nodes_;
};

// Best balanced subtree rooted at t.root (and containing it, when nonempty).
Solution solve_rooted(const ColoredGraph& g, const RootedTree& t);
Solution solve_rooted(const ColoredGraph& g, int root);

// Maximum over all roots. Accepts forests (each component must be acyclic);
// ties go to the smallest root id. threads > 1 fans the independent per-root
// runs out over OpenMP threads (0 = all hardware threads) with a
// deterministic merge.
Solution solve_tree(const ColoredGraph& g, int threads = 1);

}  // namespace bcs
