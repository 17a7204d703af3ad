#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/density.hpp"
#include "mgcolor/multigraph.hpp"

namespace mgcolor {

struct ChiResult {
    int chi = 0;
    PartialEdgeColoring witness;
};

/// Exact chromatic index with a proper witness coloring, by deterministic
/// backtracking (edges by descending endpoint degree sum, colors ascending).
ChiResult exact_chromatic_index(const Multigraph& g,
                                long long budget = kDefaultBudget);

/// A proper k-edge-coloring when one exists. Uses the constructive coloring
/// when k covers the Vizing-Gupta bound, exact search otherwise.
std::optional<PartialEdgeColoring> k_edge_color(
    const Multigraph& g, int k, long long budget = kDefaultBudget);

/// Like k_edge_color but with a seeded color-order permutation, for drawing
/// several independent witnesses of the same instance.
std::optional<PartialEdgeColoring> k_edge_color_seeded(
    const Multigraph& g, int k, unsigned long long seed,
    long long budget = kDefaultBudget);

/// Constructive proper coloring with at most maxdeg+maxmult colors: edges are
/// inserted one at a time; conflicts are repaired with multi-fan rotations
/// and Kempe swaps. Never calls the exact solver.
PartialEdgeColoring vizing_gupta_color(const Multigraph& g);

struct SaturatedEdgeRecord {
    EdgeId edge = -1;
    DenseSubgraph dense;          // H_e in g - (M u M*)
    bool fully_saturated = false; // in H_e + e, re-verified
};

struct SaturatedMatching {
    EdgeSet mstar;
    std::vector<SaturatedEdgeRecord> records;  // one per M* edge, sorted
};

/// The replacement procedure behind the saturated-matching lemma: returns a
/// matching M* of g - V(m) with chi'(g - (m u M*)) = maxdeg+maxmult-1 such
/// that every e in M* is k-critical and fully saturated inside its dense
/// subgraph certificate, plus a k-edge-coloring of the remainder.
/// Requires maxmult >= 2 and chi'(g - m) = maxdeg + maxmult.
std::pair<SaturatedMatching, PartialEdgeColoring> saturated_matching(
    const Multigraph& g, const EdgeSet& m, long long budget = kDefaultBudget);

}  // namespace mgcolor
