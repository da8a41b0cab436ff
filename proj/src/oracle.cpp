#include "bcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcs {

namespace {

struct BitGraph {
    int n = 0;
    std::uint32_t red_mask = 0;
    std::vector<std::uint32_t> adj;
};

void check_cap(int n, const OracleConfig& cfg, const char* what) {
    if (cfg.max_n < 1 || cfg.max_n > kOracleHardCap) {
        throw BcsError(Err::invalid_instance,
                       std::string(what) + ": max_n must be between 1 and " +
                           std::to_string(kOracleHardCap));
    }
    if (n > cfg.max_n) {
        throw BcsError(Err::size_exceeds_cap,
                       std::string(what) + ": size_exceeds_cap, n=" + std::to_string(n) +
                           " exceeds max_n=" + std::to_string(cfg.max_n));
    }
}

BitGraph to_bitgraph(const ColoredGraph& g) {
    BitGraph b;
    b.n = g.vertex_count();
    b.adj.assign(b.n, 0);
    for (int v = 0; v < b.n; ++v) {
        if (g.color(v) == Color::Red) b.red_mask |= 1u << v;
    }
    for (const Edge& e : g.edges()) {
        b.adj[e.u] |= 1u << e.v;
        b.adj[e.v] |= 1u << e.u;
    }
    return b;
}

BitGraph to_bitgraph(const UncoloredGraph& g) {
    BitGraph b;
    b.n = g.vertex_count();
    b.adj.assign(b.n, 0);
    for (const Edge& e : g.edges()) {
        b.adj[e.u] |= 1u << e.v;
        b.adj[e.v] |= 1u << e.u;
    }
    return b;
}

bool mask_connected(const BitGraph& g, std::uint32_t mask) {
    if (mask == 0) return true;
    std::uint32_t seen = mask & -mask;
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) {
            next |= g.adj[std::countr_zero(f)];
        }
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

bool balanced_mask(const BitGraph& g, std::uint32_t mask, int pc) {
    return 2 * std::popcount(mask & g.red_mask) == pc;
}

// Comparison of equal-popcount masks as sorted vertex lists: the mask owning
// the lowest differing bit starts with the smaller vertex at the first
// position where the lists diverge.
bool lex_smaller(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & -diff)) != 0;
}

struct Best {
    std::uint32_t mask = 0;
    int size = 0;

    // Gate: skip masks that cannot beat the incumbent before paying for the
    // connectivity flood.
    bool worth_checking(std::uint32_t mask_, int pc) const {
        if (pc < size) return false;
        if (pc == size && !lex_smaller(mask_, mask)) return false;
        return true;
    }
    void take(std::uint32_t mask_, int pc) {
        mask = mask_;
        size = pc;
    }
};

void scan_range(const BitGraph& g, std::uint64_t lo, std::uint64_t hi, Best& best) {
    for (std::uint64_t m = lo; m < hi; ++m) {
        const std::uint32_t mask = static_cast<std::uint32_t>(m);
        const int pc = std::popcount(mask);
        if (pc & 1) continue;
        if (!best.worth_checking(mask, pc)) continue;
        if (!balanced_mask(g, mask, pc)) continue;
        if (!mask_connected(g, mask)) continue;
        best.take(mask, pc);
    }
}

Solution mask_to_solution(const ColoredGraph& g, std::uint32_t mask) {
    std::vector<int> verts;
    verts.reserve(std::popcount(mask));
    for (std::uint32_t f = mask; f; f &= f - 1) verts.push_back(std::countr_zero(f));
    return Solution::of(g, std::move(verts));
}

}  // namespace

Solution oracle_bcs_serial(const ColoredGraph& g, const OracleConfig& cfg) {
    check_cap(g.vertex_count(), cfg, "oracle_bcs");
    BitGraph bg = to_bitgraph(g);
    Best best;
    scan_range(bg, 1, std::uint64_t(1) << bg.n, best);
    return mask_to_solution(g, best.mask);
}

Solution oracle_bcs(const ColoredGraph& g, const OracleConfig& cfg, int threads) {
    check_cap(g.vertex_count(), cfg, "oracle_bcs");
    BitGraph bg = to_bitgraph(g);
    const std::uint64_t total = std::uint64_t(1) << bg.n;

#ifdef _OPENMP
    int want = threads;
    if (want <= 0) want = omp_get_max_threads();
    if (want > 1 && total >= 1u << 12) {
        std::vector<Best> local(want);
        const std::uint64_t chunk = (total + want - 1) / want;
#pragma omp parallel for num_threads(want) schedule(static, 1)
        for (int t = 0; t < want; ++t) {
            std::uint64_t lo = std::max<std::uint64_t>(1, t * chunk);
            std::uint64_t hi = std::min(total, (t + 1) * chunk);
            if (lo < hi) scan_range(bg, lo, hi, local[t]);
        }
        Best best;
        for (const Best& b : local) {
            if (b.size > best.size ||
                (b.size == best.size && lex_smaller(b.mask, best.mask))) {
                best = b;
            }
        }
        return mask_to_solution(g, best.mask);
    }
#else
    (void)threads;
#endif
    Best best;
    scan_range(bg, 1, total, best);
    return mask_to_solution(g, best.mask);
}

std::vector<Solution> oracle_bcs_all(const ColoredGraph& g, const OracleConfig& cfg) {
    check_cap(g.vertex_count(), cfg, "oracle_bcs_all");
    BitGraph bg = to_bitgraph(g);
    Best best;
    scan_range(bg, 1, std::uint64_t(1) << bg.n, best);

    std::vector<Solution> all;
    if (best.size == 0) {
        all.push_back(mask_to_solution(g, 0));
        return all;
    }
    for (std::uint64_t m = 1; m < std::uint64_t(1) << bg.n; ++m) {
        const std::uint32_t mask = static_cast<std::uint32_t>(m);
        if (std::popcount(mask) != best.size) continue;
        if (!balanced_mask(bg, mask, best.size)) continue;
        if (!mask_connected(bg, mask)) continue;
        all.push_back(mask_to_solution(g, mask));
    }
    std::sort(all.begin(), all.end(),
              [](const Solution& a, const Solution& b) { return a.vertices < b.vertices; });
    return all;
}

std::optional<Solution> oracle_bcs_containing(const ColoredGraph& g, int v,
                                              const OracleConfig& cfg) {
    const int n = g.vertex_count();
    check_cap(n, cfg, "oracle_bcs_containing");
    if (v < 0 || v >= n) {
        throw BcsError(Err::invalid_instance, "oracle_bcs_containing: vertex out of range");
    }
    BitGraph bg = to_bitgraph(g);
    const std::uint32_t low_bits = (1u << v) - 1;
    Best best;
    bool found = false;
    // Walk the 2^(n-1) subsets of V - {v} and insert bit v into each.
    for (std::uint64_t s = 0; s < std::uint64_t(1) << (n - 1); ++s) {
        const std::uint32_t rest = static_cast<std::uint32_t>(s);
        const std::uint32_t mask =
            ((rest & ~low_bits) << 1) | (rest & low_bits) | (1u << v);
        const int pc = std::popcount(mask);
        if (pc & 1) continue;
        if (found && !best.worth_checking(mask, pc)) continue;
        if (!balanced_mask(bg, mask, pc)) continue;
        if (!mask_connected(bg, mask)) continue;
        best.take(mask, pc);
        found = true;
    }
    if (!found) return std::nullopt;
    return mask_to_solution(g, best.mask);
}

namespace {

// dp[mask] = set of possible endpoints of a simple path visiting exactly mask.
std::vector<std::uint32_t> path_dp(const BitGraph& g) {
    std::vector<std::uint32_t> dp(std::uint64_t(1) << g.n, 0);
    for (int v = 0; v < g.n; ++v) dp[std::uint32_t(1) << v] = 1u << v;
    for (std::uint64_t m = 1; m < std::uint64_t(1) << g.n; ++m) {
        const std::uint32_t mask = static_cast<std::uint32_t>(m);
        std::uint32_t ends = dp[mask];
        if (ends == 0) continue;
        for (; ends; ends &= ends - 1) {
            const int v = std::countr_zero(ends);
            for (std::uint32_t ext = g.adj[v] & ~mask; ext; ext &= ext - 1) {
                const int u = std::countr_zero(ext);
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return dp;
}

}  // namespace

Solution oracle_balanced_path(const ColoredGraph& g, const OracleConfig& cfg) {
    check_cap(g.vertex_count(), cfg, "oracle_balanced_path");
    BitGraph bg = to_bitgraph(g);
    std::vector<std::uint32_t> dp = path_dp(bg);
    Best best;
    for (std::uint64_t m = 1; m < std::uint64_t(1) << bg.n; ++m) {
        const std::uint32_t mask = static_cast<std::uint32_t>(m);
        if (dp[mask] == 0) continue;
        const int pc = std::popcount(mask);
        if (pc & 1) continue;
        if (!best.worth_checking(mask, pc)) continue;
        if (!balanced_mask(bg, mask, pc)) continue;
        best.take(mask, pc);
    }
    return mask_to_solution(g, best.mask);
}

bool oracle_ham_path(const UncoloredGraph& g, const OracleConfig& cfg) {
    const int n = g.vertex_count();
    check_cap(n, cfg, "oracle_ham_path");
    if (n == 0) return true;
    BitGraph bg = to_bitgraph(g);
    std::vector<std::uint32_t> dp = path_dp(bg);
    return dp[(std::uint64_t(1) << n) - 1] != 0;
}

std::optional<std::vector<int>> ham_path_order(const UncoloredGraph& g,
                                               const OracleConfig& cfg) {
    const int n = g.vertex_count();
    check_cap(n, cfg, "ham_path_order");
    if (n == 0) return std::vector<int>{};
    BitGraph bg = to_bitgraph(g);
    std::vector<std::uint32_t> dp = path_dp(bg);
    std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t(1) << n) - 1);
    if (dp[mask] == 0) return std::nullopt;

    std::vector<int> order;
    order.reserve(n);
    int v = std::countr_zero(dp[mask]);
    order.push_back(v);
    while (std::popcount(mask) > 1) {
        const std::uint32_t prev = mask ^ (1u << v);
        const std::uint32_t cand = dp[prev] & bg.adj[v];
        assert(cand != 0);
        v = std::countr_zero(cand);
        mask = prev;
        order.push_back(v);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace bcs
