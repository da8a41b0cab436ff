#pragma once

#include <optional>
#include <string>

#include "bcs/graph.hpp"
#include "bcs/oracle.hpp"

namespace bcs {

// Outcome of auto routing: either a solution plus the name of the method that
// produced it, or no solution with the ClassReport explaining why nothing
// applied.
struct AutoResult {
    std::optional<Solution> solution;
    std::string method;                 // bipartite | tree | split | diam2 | oracle
    std::optional<ClassReport> report;  // filled when unsupported

    bool supported() const { return solution.has_value(); }
};

// Routes to the strongest applicable solver, in priority order: properly
// colored bipartite, tree, split, diameter-2, then the exhaustive oracle when
// n <= cfg.max_n. Disconnected inputs are routed per component and the best
// component's answer wins (method tag from that component); if any component
// is unsupported the whole call is.
AutoResult solve_auto(const ColoredGraph& g, const OracleConfig& cfg = {});

}  // namespace bcs
