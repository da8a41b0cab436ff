#pragma once

#include "bcs/graph.hpp"
#include "bcs/prng.hpp"

namespace bcs {

// Seeded random instance generators, one per solvable class. All of them are
// deterministic given the Rng state and emit graphs that pass the matching
// classify flag. red_frac is the per-vertex probability of Red (for the
// proper-bipartite generator, the target share of red vertices).

// Random labelled tree (connected, m = n - 1).
ColoredGraph gen_tree(int n, double red_frac, Rng& rng);

// Random tree colored properly by BFS parity; blue is made the strict
// majority when the two sides differ (swap otherwise impossible at even n
// with equal sides, in which case blue simply ties).
ColoredGraph gen_tree_proper(int n, Rng& rng);

// Random connected split graph: a clique, plus independent vertices each
// attached to at least one clique vertex.
ColoredGraph gen_split(int n, double red_frac, Rng& rng);

// Random connected properly 2-colored bipartite graph; sides are the colors.
ColoredGraph gen_bipartite_proper(int n, double red_frac, Rng& rng);

// Random graph of diameter <= 2: G(n, p) followed by one fixup pass that
// directly connects any pair still at distance > 2. p < 0 draws it from
// [0.3, 0.8].
ColoredGraph gen_diam2(int n, double red_frac, Rng& rng, double p = -1.0);

// Plain G(n, p) with random colors, no class guarantee. p < 0 draws it from
// [0.1, 0.9].
ColoredGraph gen_random(int n, double red_frac, Rng& rng, double p = -1.0);

UncoloredGraph gen_random_uncolored(int n, double p, Rng& rng);

}  // namespace bcs
