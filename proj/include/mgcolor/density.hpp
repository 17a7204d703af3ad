#pragma once

#include <vector>

#include "mgcolor/multigraph.hpp"
#include "mgcolor/rational.hpp"

namespace mgcolor {

constexpr long long kDefaultBudget = 200'000'000;

/// A k-dense subgraph: odd vertex set X with |E(G[X])| = (|X|-1)k/2.
/// Always vertex-induced in its host (Lemma-2 style), so the vertex set plus
/// parameter k determines it.
struct DenseSubgraph {
    VertexSet vertices;
    int k = 0;
    int edge_count = 0;
    EdgeSet boundary;

    bool contains(Vertex v) const { return vertices.count(v) > 0; }
    bool disjoint_from(const DenseSubgraph& o) const;
};

/// Density Gamma(G): max over odd vertex subsets X, 3 <= |X| <= max_subset,
/// of 2|E(G[X])| / (|X|-1). Exact when max_subset >= |V(G)|.
Rational gamma(const Multigraph& g, int max_subset);

/// True iff chi'(g) = k+1 and chi'(g-e) = k, both certified by the exact
/// solver.
bool is_k_critical_edge(const Multigraph& g, EdgeId e, int k,
                        long long budget = kDefaultBudget);

/// The unique maximal k-dense subgraph H of g-e with V(e) in V(H).
/// Requires e to be k-critical in g and k >= max_degree(g)+1; verifies the
/// conclusions of the structure lemmas on the result.
DenseSubgraph critical_dense_subgraph(const Multigraph& g, EdgeId e, int k,
                                      long long budget = kDefaultBudget);

/// All maximal k-dense subgraphs of g, pairwise vertex-disjoint, sorted by
/// least vertex id. Returns an empty list when the precondition
/// chi'(g) = k >= max_degree(g)+1 does not hold.
std::vector<DenseSubgraph> maximal_k_dense_subgraphs(
    const Multigraph& g, int k, long long budget = kDefaultBudget);

}  // namespace mgcolor
