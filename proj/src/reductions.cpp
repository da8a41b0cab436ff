#include "bcs/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "json.hpp"

#include "bcs/oracle.hpp"
#include "parse_util.hpp"

namespace bcs {

void validate(const Ec3SetInstance& x) {
    if (x.universe_size < 0 || x.universe_size % 3 != 0) {
        throw BcsError(Err::invalid_instance,
                       "invalid_instance: universe size must be a nonnegative multiple of 3");
    }
    for (const auto& s : x.sets) {
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
            throw BcsError(Err::invalid_instance, "invalid_instance: set with repeated element");
        }
        for (int el : s) {
            if (el < 0 || el >= x.universe_size) {
                throw BcsError(Err::invalid_instance,
                               "invalid_instance: set element out of range");
            }
        }
    }
}

const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::ec3set_bcs: return "ec3set_bcs";
        case ReductionKind::ec3set_bcs_chordal: return "ec3set_bcs_chordal";
        case ReductionKind::ec3set_existence: return "ec3set_existence";
        case ReductionKind::stpg_bcs: return "stpg_bcs";
        case ReductionKind::hampath_bcp: return "hampath_bcp";
    }
    return "?";
}

namespace {

Edge mk(int u, int v) { return Edge{std::min(u, v), std::max(u, v)}; }

std::vector<int> id_range(int lo, int count) {
    std::vector<int> ids(count);
    std::iota(ids.begin(), ids.end(), lo);
    return ids;
}

// 2-colorability of the underlying graph, independent of the vertex labels.
bool two_colorable(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Shared core of the two 12k-target gadgets.
ReductionOutput ec3set_bcs_gadget(const Ec3SetInstance& x, bool chordal) {
    validate(x);
    const int k = x.k();
    const int m = x.m();
    const int set0 = 3 * k;
    const int bpath0 = set0 + m;
    const int rpath0 = bpath0 + 5 * k;
    const int n = rpath0 + 3 * k;

    std::vector<Color> colors(n, Color::Red);
    for (int v = set0; v < bpath0; ++v) colors[v] = Color::Blue;
    for (int v = bpath0; v < rpath0; ++v) colors[v] = Color::Blue;

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int el : x.sets[i]) edges.push_back(mk(el, set0 + i));
    }
    for (int j = 0; j + 1 < 5 * k; ++j) edges.push_back(mk(bpath0 + j, bpath0 + j + 1));
    for (int j = 0; j + 1 < 3 * k; ++j) edges.push_back(mk(rpath0 + j, rpath0 + j + 1));
    if (k > 0) edges.push_back(mk(rpath0 + 3 * k - 1, bpath0));  // (r_3k, b_1)
    for (int i = 0; i < m; ++i) {
        if (k > 0) edges.push_back(mk(set0 + i, bpath0 + 5 * k - 1));  // (s_i, b_5k)
    }
    if (chordal) {
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) edges.push_back(mk(set0 + i, set0 + j));
        }
    }

    ReductionOutput out;
    out.kind = chordal ? ReductionKind::ec3set_bcs_chordal : ReductionKind::ec3set_bcs;
    out.graph = ColoredGraph(n, std::move(colors), std::move(edges));
    out.vertex_map["u_j"] = id_range(0, 3 * k);
    out.vertex_map["s_i"] = id_range(set0, m);
    out.vertex_map["b_path"] = id_range(bpath0, 5 * k);
    out.vertex_map["r_path"] = id_range(rpath0, 3 * k);
    out.target_size = 12 * k;
    out.source_ec3set = x;
    if (!chordal) assert(two_colorable(out.graph));
    return out;
}

}  // namespace

ReductionOutput reduce_ec3set_bcs(const Ec3SetInstance& x) { return ec3set_bcs_gadget(x, false); }

ReductionOutput reduce_ec3set_bcs_chordal(const Ec3SetInstance& x) {
    return ec3set_bcs_gadget(x, true);
}

ReductionOutput reduce_ec3set_existence(const Ec3SetInstance& x) {
    validate(x);
    const int k = x.k();
    const int m = x.m();
    const int set0 = 3 * k;
    const int bpath0 = set0 + m;
    const int n = bpath0 + 2 * k;

    std::vector<Color> colors(n, Color::Red);
    for (int v = set0; v < n; ++v) colors[v] = Color::Blue;

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int el : x.sets[i]) edges.push_back(mk(el, set0 + i));
    }
    for (int j = 0; j + 1 < 2 * k; ++j) edges.push_back(mk(bpath0 + j, bpath0 + j + 1));
    for (int i = 0; i < m; ++i) {
        if (k > 0) edges.push_back(mk(set0 + i, bpath0 + 2 * k - 1));  // (s_i, b_2k)
    }

    ReductionOutput out;
    out.kind = ReductionKind::ec3set_existence;
    out.graph = ColoredGraph(n, std::move(colors), std::move(edges));
    out.vertex_map["u_j"] = id_range(0, 3 * k);
    out.vertex_map["s_i"] = id_range(set0, m);
    out.vertex_map["b_path"] = id_range(bpath0, 2 * k);
    out.target_size = 6 * k;
    if (k > 0) out.special_vertex = bpath0;  // b_1
    out.source_ec3set = x;
    return out;
}

ReductionOutput reduce_stpg_bcs(const SteinerInstance& x) {
    const int n0 = x.graph.vertex_count();
    if (x.budget < 0) {
        throw BcsError(Err::invalid_instance, "invalid_instance: negative budget");
    }
    if (x.terminals.empty()) {
        throw BcsError(Err::invalid_instance, "invalid_instance: no terminals");
    }
    for (std::size_t i = 0; i < x.terminals.size(); ++i) {
        int t = x.terminals[i];
        if (t < 0 || t >= n0) {
            throw BcsError(Err::invalid_instance, "invalid_instance: terminal out of range");
        }
        if (i > 0 && x.terminals[i - 1] >= t) {
            throw BcsError(Err::invalid_instance,
                           "invalid_instance: terminals must be strictly ascending");
        }
    }
    const int t_count = static_cast<int>(x.terminals.size());
    if (t_count > x.budget + 1) {
        throw BcsError(Err::budget_too_small,
                       "budget_too_small: " + std::to_string(t_count) + " terminals need at least " +
                           std::to_string(t_count - 1) + " edges");
    }

    const int pend0 = n0;
    const int z0 = pend0 + t_count;
    const int z_count = x.budget + 1 - t_count;
    const int n = z0 + z_count;

    std::vector<Color> colors(n, Color::Red);
    for (int v = 0; v < n0; ++v) colors[v] = Color::Blue;

    std::vector<Edge> edges = x.graph.edges();
    for (int i = 0; i < t_count; ++i) edges.push_back(mk(x.terminals[i], pend0 + i));
    for (int j = 0; j < z_count; ++j) edges.push_back(mk(pend0, z0 + j));

    ReductionOutput out;
    out.kind = ReductionKind::stpg_bcs;
    out.graph = ColoredGraph(n, std::move(colors), std::move(edges));
    out.vertex_map["original"] = id_range(0, n0);
    out.vertex_map["u'_i"] = id_range(pend0, t_count);
    out.vertex_map["Z"] = id_range(z0, z_count);
    out.target_size = 2 * (x.budget + 1);
    out.source_stpg = x;
    return out;
}

ReductionOutput reduce_hampath_bcp(const UncoloredGraph& q) {
    const int n0 = q.vertex_count();
    const bool odd = n0 % 2 != 0;
    const int n = n0 + (odd ? 1 : 0);

    std::vector<Edge> edges = q.edges();
    if (odd) {
        for (int v = 0; v < n0; ++v) edges.push_back(mk(v, n0));
    }
    std::vector<Color> colors(n, Color::Blue);
    for (int v = 0; v < n / 2; ++v) colors[v] = Color::Red;

    ReductionOutput out;
    out.kind = ReductionKind::hampath_bcp;
    out.padded_graph = UncoloredGraph(n, edges);
    out.graph = ColoredGraph(n, std::move(colors), std::move(edges));
    out.vertex_map["original"] = id_range(0, n0);
    if (odd) out.vertex_map["dummy"] = {n0};
    out.target_size = n;
    return out;
}

namespace {

void check(bool ok, const char* what) {
    if (!ok) {
        throw BcsError(Err::internal,
                       std::string("map_back: extracted certificate failed re-verification (") +
                           what + ")");
    }
}

std::vector<int> ec3set_certificate(const ReductionOutput& out, const Solution& sol) {
    const Ec3SetInstance& x = out.source_ec3set;
    const int set0 = 3 * x.k();
    if (out.special_vertex &&
        !std::binary_search(sol.vertices.begin(), sol.vertices.end(), *out.special_vertex)) {
        throw BcsError(Err::invalid_instance,
                       "map_back: solution does not contain the special vertex");
    }
    std::vector<int> chosen;
    for (int v : sol.vertices) {
        if (v >= set0 && v < set0 + x.m()) chosen.push_back(v - set0);
    }
    check(static_cast<int>(chosen.size()) == x.k(), "cover must pick exactly k sets");
    std::vector<char> hit(x.universe_size, 0);
    for (int idx : chosen) {
        for (int el : x.sets[idx]) {
            check(!hit[el], "chosen sets must be disjoint");
            hit[el] = 1;
        }
    }
    // k disjoint 3-sets hit 3k = |U| elements, so coverage follows; re-check anyway.
    check(std::find(hit.begin(), hit.end(), 0) == hit.end(), "chosen sets must cover the universe");
    return chosen;
}

std::vector<int> steiner_certificate(const ReductionOutput& out, const Solution& sol) {
    const SteinerInstance& st = out.source_stpg;
    const int n0 = st.graph.vertex_count();
    std::vector<int> verts;
    for (int v : sol.vertices) {
        if (v < n0) verts.push_back(v);
    }
    check(static_cast<int>(verts.size()) == st.budget + 1,
          "tree must span exactly budget+1 vertices");
    for (int t : st.terminals) {
        check(std::binary_search(verts.begin(), verts.end(), t),
              "tree must contain every terminal");
    }
    // Connectivity in the source graph.
    std::vector<char> in(n0, 0), seen(n0, 0);
    for (int v : verts) in[v] = 1;
    std::vector<int> queue{verts[0]};
    seen[verts[0]] = 1;
    std::size_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : st.graph.neighbors(queue[head])) {
            if (!in[w] || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            queue.push_back(w);
        }
    }
    check(reached == verts.size(), "tree vertex set must be connected in the source graph");
    return verts;
}

std::vector<int> hampath_certificate(const ReductionOutput& out) {
    OracleConfig cfg;
    cfg.max_n = kOracleHardCap;
    std::optional<std::vector<int>> order = ham_path_order(out.padded_graph, cfg);
    if (!order) {
        throw BcsError(Err::invalid_instance,
                       "map_back: solution admits no Hamiltonian visiting order");
    }
    const int n = out.padded_graph.vertex_count();
    check(static_cast<int>(order->size()) == n, "order must visit every vertex");
    std::vector<char> seen(n, 0);
    for (int v : *order) {
        check(!seen[v], "order must not repeat vertices");
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < order->size(); ++i) {
        const auto& nbrs = out.padded_graph.neighbors((*order)[i]);
        check(std::binary_search(nbrs.begin(), nbrs.end(), (*order)[i + 1]),
              "consecutive vertices must be adjacent");
    }
    return *order;
}

}  // namespace

SourceCertificate map_back(const ReductionOutput& out, const Solution& sol) {
    if (verify_solution(out.graph, sol) != Verdict::ok) {
        throw BcsError(Err::invalid_instance, "map_back: solution does not verify on the gadget");
    }
    if (sol.size() != out.target_size) {
        throw BcsError(Err::not_target_size, "not_target_size: expected " +
                                                 std::to_string(out.target_size) + ", got " +
                                                 std::to_string(sol.size()));
    }
    SourceCertificate cert;
    switch (out.kind) {
        case ReductionKind::ec3set_bcs:
        case ReductionKind::ec3set_bcs_chordal:
        case ReductionKind::ec3set_existence:
            cert.cover_sets = ec3set_certificate(out, sol);
            break;
        case ReductionKind::stpg_bcs:
            cert.steiner_vertices = steiner_certificate(out, sol);
            break;
        case ReductionKind::hampath_bcp:
            cert.ham_path = hampath_certificate(out);
            break;
    }
    return cert;
}

Ec3SetInstance gen_ec3set_satisfiable(int k, int m, Rng& rng) {
    if (k < 0 || m < k) {
        throw BcsError(Err::invalid_instance,
                       "invalid_instance: a satisfiable instance needs m >= k >= 0");
    }
    Ec3SetInstance x;
    x.universe_size = 3 * k;
    std::vector<int> perm(3 * k);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (int i = 0; i < k; ++i) {
        std::array<int, 3> s{perm[3 * i], perm[3 * i + 1], perm[3 * i + 2]};
        std::sort(s.begin(), s.end());
        x.sets.push_back(s);
    }
    for (int i = k; i < m; ++i) {
        // Chaff; duplicates are allowed (at k = 1 only one 3-subset exists).
        std::array<int, 3> s;
        s[0] = rng.below(3 * k);
        do s[1] = rng.below(3 * k); while (s[1] == s[0]);
        do s[2] = rng.below(3 * k); while (s[2] == s[0] || s[2] == s[1]);
        std::sort(s.begin(), s.end());
        x.sets.push_back(s);
    }
    rng.shuffle(x.sets);
    validate(x);
    return x;
}

Ec3SetInstance gen_ec3set_unsatisfiable(int k, int m, Rng& rng) {
    if (k < 2) {
        // At k = 1 every valid set equals {0,1,2}, which is itself a cover, so
        // only the empty collection is unsatisfiable.
        throw BcsError(Err::invalid_instance,
                       "invalid_instance: adversarial instances need k >= 2");
    }
    const int cover_min = (3 * k) / 2;  // ceil((3k-1)/2) non-common elements, 2 per set
    if (m < cover_min) {
        throw BcsError(Err::invalid_instance,
                       "invalid_instance: need m >= " + std::to_string(cover_min) +
                           " sets to cover the universe");
    }
    Ec3SetInstance x;
    x.universe_size = 3 * k;
    const int common = rng.below(3 * k);
    std::vector<int> others;
    for (int el = 0; el < 3 * k; ++el) {
        if (el != common) others.push_back(el);
    }
    rng.shuffle(others);
    // Every set contains `common`, so no two chosen sets are disjoint and no
    // exact cover exists for k >= 2; the pairs still cover everything else.
    for (std::size_t i = 0; i + 1 < others.size(); i += 2) {
        std::array<int, 3> s{common, others[i], others[i + 1]};
        std::sort(s.begin(), s.end());
        x.sets.push_back(s);
    }
    if (others.size() % 2 != 0) {
        std::array<int, 3> s{common, others.back(),
                             others[rng.below(static_cast<int>(others.size()) - 1)]};
        std::sort(s.begin(), s.end());
        x.sets.push_back(s);
    }
    while (x.m() < m) {
        std::array<int, 3> s;
        s[0] = common;
        do s[1] = rng.below(3 * k); while (s[1] == common);
        do s[2] = rng.below(3 * k); while (s[2] == common || s[2] == s[1]);
        std::sort(s.begin(), s.end());
        x.sets.push_back(s);
    }
    rng.shuffle(x.sets);
    validate(x);
    return x;
}

SteinerInstance gen_steiner_planted(int n, int max_terminals, Rng& rng) {
    if (n < 1 || max_terminals < 1) {
        throw BcsError(Err::invalid_instance,
                       "invalid_instance: need n >= 1 and max_terminals >= 1");
    }
    // Grow a random connected set of n cells in a grid; grid adjacency keeps
    // the instance planar under any relabeling.
    int width = 1;
    while (width * width < n) ++width;
    const int height = (n + width - 1) / width;
    auto cell_id = [&](int r, int c) { return r * width + c; };

    std::vector<int> cell_of;                       // chosen cells in pick order
    std::vector<char> picked(width * height, 0);
    std::vector<int> frontier{cell_id(rng.below(height), rng.below(width))};
    std::vector<char> in_frontier(width * height, 0);
    in_frontier[frontier[0]] = 1;
    while (static_cast<int>(cell_of.size()) < n) {
        int idx = rng.below(static_cast<int>(frontier.size()));
        int cell = frontier[idx];
        frontier[idx] = frontier.back();
        frontier.pop_back();
        if (picked[cell]) continue;
        picked[cell] = 1;
        cell_of.push_back(cell);
        const int r = cell / width, c = cell % width;
        const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
        for (int d = 0; d < 4; ++d) {
            int nr = r + dr[d], nc = c + dc[d];
            if (nr < 0 || nr >= height || nc < 0 || nc >= width) continue;
            int nb = cell_id(nr, nc);
            if (!picked[nb] && !in_frontier[nb]) {
                in_frontier[nb] = 1;
                frontier.push_back(nb);
            }
        }
    }

    // Random ids for the chosen cells.
    std::vector<int> label(width * height, -1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (int i = 0; i < n; ++i) label[cell_of[i]] = perm[i];

    std::vector<Edge> edges;
    for (int cell : cell_of) {
        const int r = cell / width, c = cell % width;
        if (c + 1 < width && picked[cell + 1]) edges.push_back(mk(label[cell], label[cell + 1]));
        if (r + 1 < height && picked[cell + width]) {
            edges.push_back(mk(label[cell], label[cell + width]));
        }
    }
    UncoloredGraph g(n, std::move(edges));

    const int t_count = std::min(n, 1 + rng.below(max_terminals));
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    std::vector<int> terminals(ids.begin(), ids.begin() + t_count);
    std::sort(terminals.begin(), terminals.end());

    // Plant a tree: join each terminal to the grown set by BFS, then charge
    // its edge count as the budget, so a witness always exists.
    std::vector<char> in_tree(n, 0);
    in_tree[terminals[0]] = 1;
    int tree_size = 1;
    for (std::size_t i = 1; i < terminals.size(); ++i) {
        if (in_tree[terminals[i]]) continue;
        std::vector<int> parent(n, -1);
        std::vector<int> queue{terminals[i]};
        parent[terminals[i]] = terminals[i];
        int meet = -1;
        for (std::size_t head = 0; head < queue.size() && meet < 0; ++head) {
            for (int w : g.neighbors(queue[head])) {
                if (parent[w] >= 0) continue;
                parent[w] = queue[head];
                if (in_tree[w]) {
                    meet = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        assert(meet >= 0);  // the graph is connected by construction
        for (int v = parent[meet]; !in_tree[v]; v = parent[v]) {
            in_tree[v] = 1;
            ++tree_size;
        }
    }

    SteinerInstance out;
    out.graph = std::move(g);
    out.terminals = std::move(terminals);
    out.budget = tree_size - 1;
    return out;
}

Ec3SetInstance parse_ec3set(std::string_view text) {
    detail::Cursor cur{text};
    std::vector<std::string_view> f;

    if (!cur.next_line(f)) throw ParseError(cur.line_no, "missing 'u <3k>' header");
    detail::expect_fields(cur, f, 2, "u <3k>");
    if (f[0] != "u") throw ParseError(cur.line_no, "first line must be 'u <3k>'");
    Ec3SetInstance x;
    x.universe_size = detail::parse_int(cur, f[1], "universe size");
    if (x.universe_size < 0 || x.universe_size % 3 != 0) {
        throw ParseError(cur.line_no, "universe size must be a nonnegative multiple of 3");
    }
    while (cur.next_line(f)) {
        detail::expect_fields(cur, f, 4, "s <a> <b> <c>");
        if (f[0] != "s") throw ParseError(cur.line_no, "expected 's <a> <b> <c>' line");
        std::array<int, 3> s;
        for (int i = 0; i < 3; ++i) {
            s[i] = detail::parse_int(cur, f[i + 1], "set element");
            if (s[i] < 0 || s[i] >= x.universe_size) {
                throw ParseError(cur.line_no, "set element out of range");
            }
        }
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
            throw ParseError(cur.line_no, "set with repeated element");
        }
        x.sets.push_back(s);
    }
    return x;
}

std::string serialize_ec3set(const Ec3SetInstance& x) {
    std::string out = "u " + std::to_string(x.universe_size) + '\n';
    for (const auto& s : x.sets) {
        out += "s " + std::to_string(s[0]) + ' ' + std::to_string(s[1]) + ' ' +
               std::to_string(s[2]) + '\n';
    }
    return out;
}

namespace {

// Shared by the "p st" and "p graph" formats; terminal/budget lines are only
// legal for the Steiner variant.
SteinerInstance parse_uncolored(std::string_view text, const char* kind, bool steiner) {
    detail::Cursor cur{text};
    std::vector<std::string_view> f;
    const std::string header = std::string("p ") + kind + " <n> <m>";

    if (!cur.next_line(f)) throw ParseError(cur.line_no, "missing header");
    detail::expect_fields(cur, f, 4, header.c_str());
    if (f[0] != "p" || f[1] != kind) {
        throw ParseError(cur.line_no, "first line must be the '" + header + "' header");
    }
    int n = detail::parse_int(cur, f[2], "vertex count");
    int m = detail::parse_int(cur, f[3], "edge count");
    if (n < 0 || m < 0) throw ParseError(cur.line_no, "negative count in header");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<int> terminals;
    std::optional<int> budget;
    while (cur.next_line(f)) {
        if (f[0] == "e") {
            detail::expect_fields(cur, f, 3, "e <u> <v>");
            int u = detail::parse_int(cur, f[1], "edge endpoint");
            int v = detail::parse_int(cur, f[2], "edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw ParseError(cur.line_no, "edge endpoint out of range");
            }
            if (u == v) throw ParseError(cur.line_no, "self-loop");
            edges.push_back(mk(u, v));
        } else if (steiner && f[0] == "t") {
            detail::expect_fields(cur, f, 2, "t <id>");
            int t = detail::parse_int(cur, f[1], "terminal id");
            if (t < 0 || t >= n) throw ParseError(cur.line_no, "terminal out of range");
            terminals.push_back(t);
        } else if (steiner && f[0] == "k") {
            detail::expect_fields(cur, f, 2, "k <budget>");
            if (budget) throw ParseError(cur.line_no, "duplicate budget line");
            budget = detail::parse_int(cur, f[1], "budget");
            if (*budget < 0) throw ParseError(cur.line_no, "negative budget");
        } else if (f[0] == "p") {
            throw ParseError(cur.line_no, "duplicate header");
        } else {
            throw ParseError(cur.line_no, "unknown line type");
        }
    }
    if (static_cast<int>(edges.size()) != m) {
        throw ParseError(cur.line_no, "edge line count does not match header");
    }
    std::vector<Edge> keys = edges;
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
        throw ParseError(cur.line_no, "duplicate edge");
    }
    SteinerInstance out;
    out.graph = UncoloredGraph(n, std::move(edges));
    if (steiner) {
        std::sort(terminals.begin(), terminals.end());
        if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) {
            throw ParseError(cur.line_no, "duplicate terminal");
        }
        if (!budget) throw ParseError(cur.line_no, "missing 'k <budget>' line");
        out.terminals = std::move(terminals);
        out.budget = *budget;
    }
    return out;
}

}  // namespace

SteinerInstance parse_steiner(std::string_view text) { return parse_uncolored(text, "st", true); }

std::string serialize_steiner(const SteinerInstance& x) {
    std::string out = "p st " + std::to_string(x.graph.vertex_count()) + ' ' +
                      std::to_string(x.graph.edge_count()) + '\n';
    for (const Edge& e : x.graph.edges()) {
        out += "e " + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    }
    for (int t : x.terminals) out += "t " + std::to_string(t) + '\n';
    out += "k " + std::to_string(x.budget) + '\n';
    return out;
}

UncoloredGraph parse_uncolored_graph(std::string_view text) {
    return parse_uncolored(text, "graph", false).graph;
}

std::string serialize_uncolored_graph(const UncoloredGraph& g) {
    std::string out =
        "p graph " + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    }
    return out;
}

std::string serialize_reduction_map(const ReductionOutput& out) {
    nlohmann::json j;
    j["kind"] = reduction_kind_name(out.kind);
    j["target_size"] = out.target_size;
    if (out.special_vertex) {
        j["special_vertex"] = *out.special_vertex;
    } else {
        j["special_vertex"] = nullptr;
    }
    nlohmann::json roles = nlohmann::json::object();
    for (const auto& [role, ids] : out.vertex_map) roles[role] = ids;
    j["roles"] = roles;
    return j.dump(2) + "\n";
}

}  // namespace bcs
