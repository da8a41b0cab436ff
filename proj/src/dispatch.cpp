#include "bcs/dispatch.hpp"

#include <algorithm>

#include "bcs/bipartite_solver.hpp"
#include "bcs/diam2_solver.hpp"
#include "bcs/split_solver.hpp"
#include "bcs/tree_solver.hpp"
#include "per_component.hpp"

namespace bcs {

namespace {

bool properly_colored(const ColoredGraph& g) {
    for (const Edge& e : g.edges()) {
        if (g.color(e.u) == g.color(e.v)) return false;
    }
    return true;
}

AutoResult route_connected(const ColoredGraph& g, const OracleConfig& cfg) {
    AutoResult res;
    if (properly_colored(g)) {
        // Outranks tree: a properly colored tree gets the stronger
        // 2*min(b,r) guarantee here.
        res.solution = solve_bipartite_proper(g);
        res.method = "bipartite";
    } else if (g.edge_count() == g.vertex_count() - 1) {
        res.solution = solve_tree(g);
        res.method = "tree";
    } else if (detect_split(g)) {
        res.solution = solve_split(g);
        res.method = "split";
    } else if (has_diameter_le_2(g)) {
        res.solution = solve_diam2(g);
        res.method = "diam2";
    } else if (g.vertex_count() <= cfg.max_n) {
        res.solution = oracle_bcs(g, cfg);
        res.method = "oracle";
    } else {
        res.report = classify(g);
    }
    return res;
}

}  // namespace

AutoResult solve_auto(const ColoredGraph& g, const OracleConfig& cfg) {
    if (is_connected(g)) return route_connected(g, cfg);

    AutoResult best;
    for (const std::vector<int>& comp : connected_components(g)) {
        detail::InducedSubgraph sub = detail::induced_subgraph(g, comp);
        AutoResult r = route_connected(sub.graph, cfg);
        if (!r.supported()) {
            AutoResult out;
            out.report = classify(g);
            return out;
        }
        std::vector<int> mapped;
        mapped.reserve(r.solution->vertices.size());
        for (int v : r.solution->vertices) mapped.push_back(sub.to_original[v]);
        Solution cand = Solution::of(g, std::move(mapped));
        if (!best.supported() || cand.size() > best.solution->size() ||
            (cand.size() == best.solution->size() &&
             cand.vertices < best.solution->vertices)) {
            best.solution = std::move(cand);
            best.method = r.method;
        }
    }
    return best;
}

}  // namespace bcs
