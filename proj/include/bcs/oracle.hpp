#pragma once

#include <optional>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

inline constexpr int kOracleHardCap = 26;

struct OracleConfig {
    // Largest instance the exhaustive scans accept. Raising it towards the
    // hard cap of 26 is allowed but costs 2^n time (and, for the path oracle,
    // 4 * 2^n bytes of memory), so expect several seconds per call up there.
    int max_n = 20;
    // When set, callers want every optimum, not just the first; served by
    // oracle_bcs_all.
    bool enumerate_all = false;
};

// Maximum balanced connected subgraph by exhaustive subset scan. Ties broken
// by the lexicographically smallest sorted vertex list. threads > 1 shards the
// subset range across OpenMP threads (0 = all hardware threads); the merged
// result is identical for every thread count.
Solution oracle_bcs(const ColoredGraph& g, const OracleConfig& cfg = {}, int threads = 1);

// Plain single-loop reference for the scan above; kept separate so tests and
// the benchmark can compare the two implementations.
Solution oracle_bcs_serial(const ColoredGraph& g, const OracleConfig& cfg = {});

// Every optimal solution, sorted by vertex list.
std::vector<Solution> oracle_bcs_all(const ColoredGraph& g, const OracleConfig& cfg = {});

// Largest balanced connected solution whose vertex set contains v, if any.
std::optional<Solution> oracle_bcs_containing(const ColoredGraph& g, int v,
                                              const OracleConfig& cfg = {});

// Maximum-size balanced vertex set traversable as a simple path. Dynamic
// program over (visited set, endpoint). Ties as in oracle_bcs. Empty solution
// if no nonempty balanced path exists.
Solution oracle_balanced_path(const ColoredGraph& g, const OracleConfig& cfg = {});

// Hamiltonian path existence on an uncolored graph, same DP.
bool oracle_ham_path(const UncoloredGraph& g, const OracleConfig& cfg = {});

// One Hamiltonian path in visiting order (lowest-endpoint backtracking), or
// nullopt when none exists.
std::optional<std::vector<int>> ham_path_order(const UncoloredGraph& g,
                                               const OracleConfig& cfg = {});

}  // namespace bcs
