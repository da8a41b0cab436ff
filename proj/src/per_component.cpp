#include "per_component.hpp"

#include <algorithm>

namespace bcs::detail {

InducedSubgraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vertices) {
    InducedSubgraph sub;
    sub.to_original = vertices;
    std::sort(sub.to_original.begin(), sub.to_original.end());

    std::vector<int> local(g.vertex_count(), -1);
    std::vector<Color> colors;
    colors.reserve(sub.to_original.size());
    for (std::size_t i = 0; i < sub.to_original.size(); ++i) {
        local[sub.to_original[i]] = static_cast<int>(i);
        colors.push_back(g.color(sub.to_original[i]));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (local[e.u] >= 0 && local[e.v] >= 0) {
            edges.push_back({local[e.u], local[e.v]});
        }
    }
    sub.graph = ColoredGraph(static_cast<int>(sub.to_original.size()), std::move(colors),
                             std::move(edges));
    return sub;
}

Solution best_over_components(const ColoredGraph& g,
                              const std::function<Solution(const ColoredGraph&)>& solve) {
    if (is_connected(g)) return solve(g);

    Solution best;
    for (const std::vector<int>& comp : connected_components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        Solution local = solve(sub.graph);
        std::vector<int> mapped;
        mapped.reserve(local.vertices.size());
        for (int v : local.vertices) mapped.push_back(sub.to_original[v]);
        Solution cand = Solution::of(g, std::move(mapped));
        if (cand.size() > best.size() ||
            (cand.size() == best.size() && cand.vertices < best.vertices)) {
            best = cand;
        }
    }
    return best;
}

}  // namespace bcs::detail
