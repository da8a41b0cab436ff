#pragma once

#include <functional>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs::detail {

struct InducedSubgraph {
    ColoredGraph graph;
    std::vector<int> to_original;  // local id -> original id (ascending)
};

InducedSubgraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vertices);

// Applies a solver meant for connected graphs to each component and keeps the
// best solution (ties by lexicographically smallest vertex list). Balanced
// connected subgraphs never span components, so this loses nothing. The id
// remap is order-preserving, which keeps every lowest-id tie-break inside the
// solver aligned with original ids.
Solution best_over_components(const ColoredGraph& g,
                              const std::function<Solution(const ColoredGraph&)>& solve);

}  // namespace bcs::detail
