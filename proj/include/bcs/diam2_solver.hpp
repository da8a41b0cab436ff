#pragma once

#include "bcs/graph.hpp"

namespace bcs {

// Lowest-id vertex adjacent to both u and v.  Requires u != v and (u,v) not
// an edge; throws adjacent_input when they are adjacent and no_common_neighbor
// when none exists (which disproves diameter <= 2).
int common_neighbor(const ColoredGraph& g, int u, int v);

// Phase 1: the set of all blue vertices plus the red connectors needed to
// make it induce a connected subgraph, merging the two lowest-indexed blue
// components through a common neighbor until one remains.  Expects blue to be
// the minority color (callers swap first).  Result is sorted and has at most
// 2*blue_count - 1 vertices.
std::vector<int> merge_blue_components(const ColoredGraph& g);

// Solver for graphs whose components have diameter <= 2: per component,
// merge_blue_components then pad with the lowest-id adjacent red vertices
// until balanced, for a result of size exactly 2*min(|R|,|B|); disconnected
// inputs keep the best component.  Throws not_diameter_2 when some component
// has a pair at distance > 2.
Solution solve_diam2(const ColoredGraph& g);

}  // namespace bcs
