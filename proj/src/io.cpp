#include "bcs/io.hpp"

#include "parse_util.hpp"

#include <algorithm>
#include <vector>

namespace bcs {

ColoredGraph parse_graph(std::string_view text) {
    detail::Cursor cur{text};
    std::vector<std::string_view> f;

    if (!cur.next_line(f)) throw ParseError(cur.line_no, "missing header");
    detail::expect_fields(cur, f, 4, "p bcs <n> <m>");
    if (f[0] != "p" || f[1] != "bcs") {
        throw ParseError(cur.line_no, "first line must be the 'p bcs <n> <m>' header");
    }
    int n = detail::parse_int(cur, f[2], "vertex count");
    int m = detail::parse_int(cur, f[3], "edge count");
    if (n < 0 || m < 0) throw ParseError(cur.line_no, "negative count in header");

    std::vector<Color> colors(n, Color::Red);
    std::vector<char> seen_vertex(n, 0);
    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::pair<int, int>> edge_keys;
    edge_keys.reserve(m);
    int vertices_seen = 0;

    while (cur.next_line(f)) {
        if (f[0] == "v") {
            detail::expect_fields(cur, f, 3, "v <id> <R|B>");
            int id = detail::parse_int(cur, f[1], "vertex id");
            if (id < 0 || id >= n) throw ParseError(cur.line_no, "vertex id out of range");
            if (seen_vertex[id]) throw ParseError(cur.line_no, "duplicate vertex id");
            seen_vertex[id] = 1;
            ++vertices_seen;
            if (f[2] == "R") {
                colors[id] = Color::Red;
            } else if (f[2] == "B") {
                colors[id] = Color::Blue;
            } else {
                throw ParseError(cur.line_no, "unknown color, expected R or B");
            }
        } else if (f[0] == "e") {
            detail::expect_fields(cur, f, 3, "e <u> <v>");
            int u = detail::parse_int(cur, f[1], "edge endpoint");
            int v = detail::parse_int(cur, f[2], "edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw ParseError(cur.line_no, "edge endpoint out of range");
            }
            if (u == v) throw ParseError(cur.line_no, "self-loop");
            edges.push_back({std::min(u, v), std::max(u, v)});
            edge_keys.emplace_back(edges.back().u, edges.back().v);
        } else if (f[0] == "p") {
            throw ParseError(cur.line_no, "duplicate header");
        } else {
            throw ParseError(cur.line_no, "unknown line type");
        }
    }

    if (vertices_seen != n) {
        throw ParseError(cur.line_no, "vertex line count does not match header");
    }
    if (static_cast<int>(edges.size()) != m) {
        throw ParseError(cur.line_no, "edge line count does not match header");
    }
    std::sort(edge_keys.begin(), edge_keys.end());
    if (std::adjacent_find(edge_keys.begin(), edge_keys.end()) != edge_keys.end()) {
        throw ParseError(cur.line_no, "duplicate edge");
    }
    return ColoredGraph(n, std::move(colors), std::move(edges));
}

std::string serialize_graph(const ColoredGraph& g) {
    std::string out;
    out.reserve(16 + 8 * static_cast<std::size_t>(g.vertex_count()) +
                12 * static_cast<std::size_t>(g.edge_count()));
    out += "p bcs " + std::to_string(g.vertex_count()) + ' ' +
           std::to_string(g.edge_count()) + '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "v " + std::to_string(v) + ' ';
        out += color_char(g.color(v));
        out += '\n';
    }
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    }
    return out;
}

std::vector<int> parse_solution(std::string_view text) {
    detail::Cursor cur{text};
    std::vector<std::string_view> f;

    if (!cur.next_line(f)) throw ParseError(cur.line_no, "missing 's <size>' header");
    detail::expect_fields(cur, f, 2, "s <size>");
    if (f[0] != "s") throw ParseError(cur.line_no, "first line must be 's <size>'");
    int size = detail::parse_int(cur, f[1], "solution size");
    if (size < 0) throw ParseError(cur.line_no, "negative solution size");

    std::vector<int> ids;
    ids.reserve(size);
    while (cur.next_line(f)) {
        detail::expect_fields(cur, f, 2, "l <id>");
        if (f[0] != "l") throw ParseError(cur.line_no, "expected 'l <id>' line");
        int id = detail::parse_int(cur, f[1], "vertex id");
        if (!ids.empty() && ids.back() >= id) {
            throw ParseError(cur.line_no, "vertex ids must be strictly ascending");
        }
        ids.push_back(id);
    }
    if (static_cast<int>(ids.size()) != size) {
        throw ParseError(cur.line_no, "vertex line count does not match 's' header");
    }
    return ids;
}

std::string serialize_solution(const Solution& sol) {
    std::string out = "s " + std::to_string(sol.size()) + '\n';
    for (int v : sol.vertices) out += "l " + std::to_string(v) + '\n';
    return out;
}

}  // namespace bcs
