#pragma once

#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

// Split partition witness: K a clique, S independent, with the color-refined
// views the solver works on. All lists sorted ascending.
struct SplitPartition {
    std::vector<int> K;
    std::vector<int> S;
    std::vector<int> K_red, K_blue;
    std::vector<int> S_red, S_blue;
};

// Degree-sequence recognition; |K| is maximal and ties at the clique boundary
// go to lower ids. Throws not_split when the graph is not split.
SplitPartition split_partition(const ColoredGraph& g);

// Step-1 edge pruning: an independent-set vertex adjacent to opposite-colored
// clique vertices keeps only the single edge to the lowest-id such neighbor
// (all its other edges are dropped); other vertices keep their edges.
ColoredGraph prune_edges(const ColoredGraph& g, const SplitPartition& p);

// Maximum balanced connected subgraph of a split graph; the result has size
// exactly 2*min(blue, red) of the best component. Disconnected inputs are
// solved per component (each component must itself be split).
Solution solve_split(const ColoredGraph& g);

}  // namespace bcs
