#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcs {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

// Error codes shared by solvers, parsers and reductions. The CLI maps these
// onto exit codes; tests match on them.
enum class Err {
    parse,
    invalid_instance,
    size_exceeds_cap,
    not_a_tree,
    not_split,
    not_proper_coloring,
    not_diameter_2,
    not_connected,
    adjacent_input,
    no_common_neighbor,
    no_majority_leaf,
    budget_too_small,
    not_target_size,
    internal,
};

class BcsError : public std::runtime_error {
public:
    BcsError(Err code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

struct Edge {
    int u = 0;
    int v = 0;  // normalized so that u < v
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with a red/blue vertex coloring. Vertices are dense
// ids 0..n-1. Immutable after construction; adjacency lists are sorted.
class ColoredGraph {
public:
    ColoredGraph() = default;
    ColoredGraph(int n, std::vector<Color> colors, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Color color(int v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    int red_count() const { return red_count_; }
    int blue_count() const { return n_ - red_count_; }
    int count(Color c) const { return c == Color::Red ? red_count() : blue_count(); }

    // Same structure with every vertex color flipped.
    ColoredGraph with_swapped_colors() const;

private:
    int n_ = 0;
    int red_count_ = 0;
    std::vector<Color> colors_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Uncolored companion used by the reduction inputs.
class UncoloredGraph {
public:
    UncoloredGraph() = default;
    UncoloredGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A candidate answer: a sorted vertex set plus its color counts.
struct Solution {
    std::vector<int> vertices;  // strictly ascending
    int red_count = 0;
    int blue_count = 0;

    int size() const { return static_cast<int>(vertices.size()); }
    bool balanced() const { return red_count == blue_count; }

    static Solution of(const ColoredGraph& g, std::vector<int> vertices);

    friend bool operator==(const Solution&, const Solution&) = default;
};

enum class Verdict { ok, not_subset, not_balanced, not_connected };

const char* verdict_name(Verdict v);

// Checks sol against g: vertex ids in range and distinct, equal color counts,
// induced subgraph connected. The empty set passes.
Verdict verify_solution(const ColoredGraph& g, const Solution& sol);
Verdict verify_solution(const ColoredGraph& g, const std::vector<int>& vertices);

// Whole-graph connectivity; empty graph counts as connected.
bool is_connected(const ColoredGraph& g);

// True iff g is connected and every pair of vertices is at distance <= 2.
bool has_diameter_le_2(const ColoredGraph& g);

struct ClassReport {
    bool connected = false;
    bool tree = false;
    bool split = false;
    std::vector<int> split_K;  // witness when split: clique side
    std::vector<int> split_S;  // witness when split: independent side
    bool proper_bipartite = false;
    std::optional<Edge> monochromatic_edge;  // witness when not properly colored
    bool diameter_le_2 = false;
};

// Recognizes the solvable classes. Every true flag is backed by a witness that
// this function re-verifies before reporting (split partition checked as
// clique + independent set, etc.).
ClassReport classify(const ColoredGraph& g);

// Degree-sequence split test (Hammer-Simeone). Returns the (K, S) witness with
// |K| maximal, ties broken by moving lowest-id vertices into K, or nullopt if
// the graph is not split. Exposed for the split solver.
std::optional<std::pair<std::vector<int>, std::vector<int>>> detect_split(const ColoredGraph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const ColoredGraph& g);

}  // namespace bcs
