#include "bcs/generate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace bcs {

namespace {

std::vector<Color> random_colors(int n, double red_frac, Rng& rng) {
    std::vector<Color> colors(n, Color::Blue);
    for (int v = 0; v < n; ++v) {
        if (rng.chance(red_frac)) colors[v] = Color::Red;
    }
    return colors;
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return perm;
}

// Random attachment tree on labels 0..n-1, then a random relabeling so vertex
// ids carry no structure.
std::vector<Edge> random_tree_edges(int n, Rng& rng) {
    std::vector<int> label = random_permutation(n, rng);
    std::vector<Edge> edges;
    edges.reserve(std::max(0, n - 1));
    for (int v = 1; v < n; ++v) {
        int u = rng.below(v);
        edges.push_back({std::min(label[u], label[v]), std::max(label[u], label[v])});
    }
    return edges;
}

}  // namespace

ColoredGraph gen_tree(int n, double red_frac, Rng& rng) {
    std::vector<Edge> edges = random_tree_edges(n, rng);
    return ColoredGraph(n, random_colors(n, red_frac, rng), std::move(edges));
}

ColoredGraph gen_tree_proper(int n, Rng& rng) {
    std::vector<Edge> edges = random_tree_edges(n, rng);
    ColoredGraph skeleton(n, std::vector<Color>(n, Color::Red), edges);

    std::vector<int> parity(n, -1);
    std::vector<int> queue;
    if (n > 0) {
        parity[0] = 0;
        queue.push_back(0);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : skeleton.neighbors(v)) {
            if (parity[w] >= 0) continue;
            parity[w] = parity[v] ^ 1;
            queue.push_back(w);
        }
    }
    int side1 = 0;
    for (int v = 0; v < n; ++v) side1 += parity[v];
    const int blue_parity = 2 * side1 >= n ? 1 : 0;  // the (weak) majority side
    std::vector<Color> colors(n);
    for (int v = 0; v < n; ++v) {
        colors[v] = parity[v] == blue_parity ? Color::Blue : Color::Red;
    }
    return ColoredGraph(n, std::move(colors), std::move(edges));
}

ColoredGraph gen_split(int n, double red_frac, Rng& rng) {
    std::vector<int> perm = random_permutation(n, rng);
    const int q = n == 0 ? 0 : 1 + rng.below(n);
    std::vector<int> K(perm.begin(), perm.begin() + q);
    std::vector<int> S(perm.begin() + q, perm.end());

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t j = i + 1; j < K.size(); ++j) {
            edges.push_back({std::min(K[i], K[j]), std::max(K[i], K[j])});
        }
    }
    for (int s : S) {
        std::vector<char> attached(q, 0);
        attached[rng.below(q)] = 1;  // at least one clique neighbor
        for (int i = 0; i < q; ++i) {
            if (!attached[i] && rng.chance(0.3)) attached[i] = 1;
        }
        for (int i = 0; i < q; ++i) {
            if (attached[i]) edges.push_back({std::min(s, K[i]), std::max(s, K[i])});
        }
    }
    return ColoredGraph(n, random_colors(n, red_frac, rng), std::move(edges));
}

ColoredGraph gen_bipartite_proper(int n, double red_frac, Rng& rng) {
    std::vector<Color> colors(n, Color::Blue);
    std::vector<int> perm = random_permutation(n, rng);
    int n_red = static_cast<int>(red_frac * n + 0.5);
    if (n >= 2) n_red = std::clamp(n_red, 1, n - 1);  // both sides nonempty
    if (n == 1 && rng.chance(red_frac)) n_red = 1;
    std::vector<int> reds(perm.begin(), perm.begin() + n_red);
    std::vector<int> blues(perm.begin() + n_red, perm.end());
    for (int v : reds) colors[v] = Color::Red;

    std::vector<Edge> edges;
    if (!reds.empty() && !blues.empty()) {
        // Random spanning structure: place one vertex of each side, then the
        // rest in random order, attaching to a random placed opposite vertex.
        std::vector<int> placed_red{reds[0]}, placed_blue{blues[0]};
        edges.push_back({std::min(reds[0], blues[0]), std::max(reds[0], blues[0])});
        std::vector<std::pair<int, Color>> rest;
        for (std::size_t i = 1; i < reds.size(); ++i) rest.push_back({reds[i], Color::Red});
        for (std::size_t i = 1; i < blues.size(); ++i) rest.push_back({blues[i], Color::Blue});
        rng.shuffle(rest);
        for (auto [v, c] : rest) {
            auto& own = c == Color::Red ? placed_red : placed_blue;
            auto& opposite = c == Color::Red ? placed_blue : placed_red;
            int u = opposite[rng.below(static_cast<int>(opposite.size()))];
            edges.push_back({std::min(u, v), std::max(u, v)});
            own.push_back(v);
        }
        // Sprinkle extra bichromatic edges on top of the tree.
        const double p = std::min(1.0, 4.0 / n);
        std::sort(edges.begin(), edges.end());
        for (int u : reds) {
            for (int v : blues) {
                Edge e{std::min(u, v), std::max(u, v)};
                if (rng.chance(p) && !std::binary_search(edges.begin(), edges.end(), e)) {
                    edges.push_back(e);
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    return ColoredGraph(n, std::move(colors), std::move(edges));
}

ColoredGraph gen_random(int n, double red_frac, Rng& rng, double p) {
    if (p < 0) p = 0.1 + 0.8 * rng.unit();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) edges.push_back({u, v});
        }
    }
    return ColoredGraph(n, random_colors(n, red_frac, rng), std::move(edges));
}

UncoloredGraph gen_random_uncolored(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) edges.push_back({u, v});
        }
    }
    return UncoloredGraph(n, std::move(edges));
}

ColoredGraph gen_diam2(int n, double red_frac, Rng& rng, double p) {
    if (p < 0) p = 0.3 + 0.5 * rng.unit();
    // Adjacency bitsets; one ordered fixup pass connects every pair still at
    // distance > 2. Later added edges never invalidate earlier witnesses.
    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
    auto set_edge = [&](int u, int v) {
        adj[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64);
        adj[static_cast<std::size_t>(v) * words + u / 64] |= 1ull << (u % 64);
    };
    auto connected_within_2 = [&](int u, int v) {
        const std::uint64_t* a = &adj[static_cast<std::size_t>(u) * words];
        const std::uint64_t* b = &adj[static_cast<std::size_t>(v) * words];
        if (a[v / 64] >> (v % 64) & 1) return true;
        for (int w = 0; w < words; ++w) {
            if (a[w] & b[w]) return true;
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) set_edge(u, v);
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!connected_within_2(u, v)) set_edge(u, v);
        }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (adj[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64) & 1) {
                edges.push_back({u, v});
            }
        }
    }
    ColoredGraph g(n, random_colors(n, red_frac, rng), std::move(edges));
    assert(has_diameter_le_2(g));
    return g;
}

}  // namespace bcs
