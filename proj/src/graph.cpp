#include "bcs/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <set>

namespace bcs {

namespace {

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<Edge>& edges,
                                              const char* what) {
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw BcsError(Err::invalid_instance,
                           std::string(what) + ": edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw BcsError(Err::invalid_instance, std::string(what) + ": self-loop");
        }
        int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (!seen.insert({a, b}).second) {
            throw BcsError(Err::invalid_instance, std::string(what) + ": duplicate edge");
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

ColoredGraph::ColoredGraph(int n, std::vector<Color> colors, std::vector<Edge> edges)
    : n_(n), colors_(std::move(colors)), edges_(normalize_edges(std::move(edges))) {
    if (n_ < 0 || static_cast<int>(colors_.size()) != n_) {
        throw BcsError(Err::invalid_instance, "graph: color list does not match vertex count");
    }
    adj_ = build_adjacency(n_, edges_, "graph");
    red_count_ = static_cast<int>(
        std::count(colors_.begin(), colors_.end(), Color::Red));
}

bool ColoredGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

ColoredGraph ColoredGraph::with_swapped_colors() const {
    std::vector<Color> flipped(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i) flipped[i] = other(colors_[i]);
    return ColoredGraph(n_, std::move(flipped), edges_);
}

UncoloredGraph::UncoloredGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(normalize_edges(std::move(edges))) {
    if (n_ < 0) throw BcsError(Err::invalid_instance, "graph: negative vertex count");
    adj_ = build_adjacency(n_, edges_, "graph");
}

Solution Solution::of(const ColoredGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    Solution s;
    s.vertices = std::move(vertices);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        int v = s.vertices[i];
        if (v < 0 || v >= g.vertex_count()) {
            throw BcsError(Err::invalid_instance, "solution: vertex id out of range");
        }
        if (i > 0 && s.vertices[i - 1] == v) {
            throw BcsError(Err::invalid_instance, "solution: duplicate vertex id");
        }
        if (g.color(v) == Color::Red) {
            ++s.red_count;
        } else {
            ++s.blue_count;
        }
    }
    return s;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ok: return "ok";
        case Verdict::not_subset: return "not_subset";
        case Verdict::not_balanced: return "not_balanced";
        case Verdict::not_connected: return "not_connected";
    }
    return "?";
}

Verdict verify_solution(const ColoredGraph& g, const std::vector<int>& vertices) {
    int n = g.vertex_count();
    std::vector<char> in(n, 0);
    int red = 0, blue = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n || in[v]) return Verdict::not_subset;
        in[v] = 1;
        (g.color(v) == Color::Red ? red : blue)++;
    }
    if (red != blue) return Verdict::not_balanced;
    if (vertices.empty()) return Verdict::ok;

    // BFS inside the induced subgraph.
    std::vector<int> stack{vertices.front()};
    std::vector<char> seen(n, 0);
    seen[vertices.front()] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == static_cast<int>(vertices.size()) ? Verdict::ok
                                                        : Verdict::not_connected;
}

Verdict verify_solution(const ColoredGraph& g, const Solution& sol) {
    return verify_solution(g, sol.vertices);
}

bool is_connected(const ColoredGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<std::vector<int>> connected_components(const ColoredGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> detect_split(
    const ColoredGraph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Degree descending, id ascending: ties at the clique boundary resolve to
    // the lowest-id vertex, which also maximizes determinism of the witness.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    int m = 0;
    for (int i = 0; i < n; ++i) {
        if (g.degree(order[i]) >= i) m = i + 1;
    }
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) {
        (i < m ? head : tail) += g.degree(order[i]);
    }
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

    std::vector<int> K(order.begin(), order.begin() + m);
    std::vector<int> S(order.begin() + m, order.end());
    std::sort(K.begin(), K.end());
    std::sort(S.begin(), S.end());
    return std::make_pair(std::move(K), std::move(S));
}

namespace {

bool check_split_witness(const ColoredGraph& g, const std::vector<int>& K,
                         const std::vector<int>& S) {
    for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t j = i + 1; j < K.size(); ++j) {
            if (!g.has_edge(K[i], K[j])) return false;
        }
    }
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : S) in_s[v] = 1;
    for (const Edge& e : g.edges()) {
        if (in_s[e.u] && in_s[e.v]) return false;
    }
    return true;
}

}  // namespace

bool has_diameter_le_2(const ColoredGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    if (!is_connected(g)) return false;
    if (n <= 8192) {
        // Bitset rows; for each non-adjacent pair look for a common neighbor.
        int words = (n + 63) / 64;
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
        for (const Edge& e : g.edges()) {
            rows[static_cast<std::size_t>(e.u) * words + e.v / 64] |= 1ull << (e.v % 64);
            rows[static_cast<std::size_t>(e.v) * words + e.u / 64] |= 1ull << (e.u % 64);
        }
        for (int u = 0; u < n; ++u) {
            const std::uint64_t* ru = &rows[static_cast<std::size_t>(u) * words];
            for (int v = u + 1; v < n; ++v) {
                if (ru[v / 64] >> (v % 64) & 1) continue;
                const std::uint64_t* rv = &rows[static_cast<std::size_t>(v) * words];
                bool common = false;
                for (int w = 0; w < words; ++w) {
                    if (ru[w] & rv[w]) {
                        common = true;
                        break;
                    }
                }
                if (!common) return false;
            }
        }
        return true;
    }
    // Large graphs: BFS from every vertex, stopping as soon as depth 2 is
    // exceeded. Slow only when the graph really does have tiny diameter.
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        int reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    if (dist[w] > 2) return false;
                    ++reached;
                    queue.push_back(w);
                }
            }
        }
        if (reached != n) return false;
    }
    return true;
}

ClassReport classify(const ColoredGraph& g) {
    ClassReport r;
    r.connected = is_connected(g);
    r.tree = r.connected && g.edge_count() == g.vertex_count() - 1;

    if (auto split = detect_split(g)) {
        auto& [K, S] = *split;
        // The witness must actually check out; a failure here would mean the
        // degree-sequence test and the partition disagree.
        if (!check_split_witness(g, K, S)) {
            throw BcsError(Err::internal, "classify: split witness failed re-verification");
        }
        r.split = true;
        r.split_K = std::move(K);
        r.split_S = std::move(S);
    }

    r.proper_bipartite = true;
    for (const Edge& e : g.edges()) {
        if (g.color(e.u) == g.color(e.v)) {
            r.proper_bipartite = false;
            r.monochromatic_edge = e;
            break;
        }
    }

    r.diameter_le_2 = has_diameter_le_2(g);
    return r;
}

}  // namespace bcs
