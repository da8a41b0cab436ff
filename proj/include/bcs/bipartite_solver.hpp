#pragma once

#include "bcs/graph.hpp"

namespace bcs {

// Tree edges of a BFS spanning tree of a connected graph, rooted at vertex 0.
std::vector<Edge> spanning_tree(const ColoredGraph& g);

// Lowest-id vertex of `color` among `alive` with tree degree <= 1, where the
// tree is given by `tree_adj` restricted to alive vertices.  Throws
// Err::no_majority_leaf when none exists.
int find_majority_leaf(const std::vector<std::vector<int>>& tree_adj,
                       const std::vector<char>& alive, const ColoredGraph& g, Color color);

// Solver for properly 2-colored graphs: every edge joins a red and a blue
// vertex.  Per connected component the result has size exactly
// 2*min(|R|,|B|); disconnected inputs keep the best component.  Throws
// not_proper_coloring with a monochromatic-edge witness otherwise.
Solution solve_bipartite_proper(const ColoredGraph& g);

}  // namespace bcs
