#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcs/graph.hpp"
#include "bcs/prng.hpp"

namespace bcs {

// Exact Cover by 3-Sets: universe 0..3k-1 plus m three-element subsets. A
// yes-instance has k pairwise disjoint sets covering the universe.
struct Ec3SetInstance {
    int universe_size = 0;  // 3k
    std::vector<std::array<int, 3>> sets;

    int k() const { return universe_size / 3; }
    int m() const { return static_cast<int>(sets.size()); }
};

// Throws invalid_instance unless universe_size = 3k >= 0 and every set holds
// three distinct in-range elements.
void validate(const Ec3SetInstance& x);

// Steiner Tree in Planar Graphs: does graph contain a tree with at most
// `budget` edges spanning all terminals? Planarity is the producer's promise
// and is not re-verified here.
struct SteinerInstance {
    UncoloredGraph graph;
    std::vector<int> terminals;  // X, sorted ascending
    int budget = 0;              // k
};

enum class ReductionKind {
    ec3set_bcs,
    ec3set_bcs_chordal,
    ec3set_existence,
    stpg_bcs,
    hampath_bcp,
};

const char* reduction_kind_name(ReductionKind k);

// A generated gadget: the colored graph, the role of every vertex, the
// solution size the forward direction of the source lemma promises, and for
// the existence reduction the vertex the solution must contain. The source
// instance rides along so map_back can re-verify extracted certificates.
struct ReductionOutput {
    ReductionKind kind = ReductionKind::ec3set_bcs;
    ColoredGraph graph;
    std::map<std::string, std::vector<int>> vertex_map;  // role -> ascending ids
    int target_size = 0;
    std::optional<int> special_vertex;

    Ec3SetInstance source_ec3set;  // ec3set_* kinds
    SteinerInstance source_stpg;   // stpg_bcs
    UncoloredGraph padded_graph;   // hampath_bcp: Q' (dummy included when added)
};

// Certificate for the source instance recovered from a gadget solution; the
// field matching the reduction kind is filled.
struct SourceCertificate {
    std::vector<int> cover_sets;        // ec3set_*: indices of the chosen sets
    std::vector<int> steiner_vertices;  // stpg_bcs: tree vertex set, size budget+1
    std::vector<int> ham_path;          // hampath_bcp: visiting order on Q'
};

// Element vertices first (red), then one blue vertex per set, then a blue
// path b_1..b_5k and a red path r_1..r_3k with (r_3k, b_1) and (s_i, b_5k)
// edges. Target 12k.
ReductionOutput reduce_ec3set_bcs(const Ec3SetInstance& x);

// Same gadget plus a clique on the set vertices. Target 12k.
ReductionOutput reduce_ec3set_bcs_chordal(const Ec3SetInstance& x);

// Elements, set vertices, and a blue path b_1..b_2k ending in edges
// (b_2k, s_i). Target 6k; solutions must contain special_vertex b_1.
ReductionOutput reduce_ec3set_existence(const Ec3SetInstance& x);

// Original vertices blue, one red pendant per terminal, and budget+1-|X| red
// filler vertices on the first pendant. Target 2*(budget+1). Throws
// budget_too_small when |X| > budget+1.
ReductionOutput reduce_stpg_bcs(const SteinerInstance& x);

// Pads odd orders with a universal dummy vertex, then colors the lower half
// of the ids red. Target = the padded vertex count.
ReductionOutput reduce_hampath_bcp(const UncoloredGraph& q);

// Recovers the source certificate from a gadget solution of exactly
// target_size (throws not_target_size otherwise, invalid_instance if the
// solution does not even verify). The recovered certificate is re-verified
// against the source instance; a failure there throws internal.
SourceCertificate map_back(const ReductionOutput& out, const Solution& sol);

// Planted instance generators. The satisfiable one hides a perfect partition
// among m >= k sets (it refuses m < k, where no yes-instance exists); the
// unsatisfiable one, for k >= 2, gives every set one common element so no two
// chosen sets are ever disjoint, while still covering the universe (m >= the
// cover minimum).
Ec3SetInstance gen_ec3set_satisfiable(int k, int m, Rng& rng);
Ec3SetInstance gen_ec3set_unsatisfiable(int k, int m, Rng& rng);

// Random connected induced subgraph of a grid (planar by construction) with
// randomly relabeled vertices, random terminals, and the budget set to the
// planted tree's edge count.
SteinerInstance gen_steiner_planted(int n, int max_terminals, Rng& rng);

// File formats.
//   EC3Set:  "u <3k>" then one "s <a> <b> <c>" line per set.
//   Steiner: "p st <n> <m>", "e <u> <v>" lines, "t <id>" terminal lines,
//            "k <budget>".
//   Uncolored graph (Ham-Path input): "p graph <n> <m>" plus "e <u> <v>".
Ec3SetInstance parse_ec3set(std::string_view text);
std::string serialize_ec3set(const Ec3SetInstance& x);
SteinerInstance parse_steiner(std::string_view text);
std::string serialize_steiner(const SteinerInstance& x);
UncoloredGraph parse_uncolored_graph(std::string_view text);
std::string serialize_uncolored_graph(const UncoloredGraph& g);

// JSON sidecar for a gadget: kind, roles, target size, special vertex.
std::string serialize_reduction_map(const ReductionOutput& out);

}  // namespace bcs
