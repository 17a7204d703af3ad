#pragma once

#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "mgcolor/errors.hpp"

namespace mgcolor {

using Vertex = int;
using EdgeId = int;
using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<EdgeId>;

constexpr int kInfinity = std::numeric_limits<int>::max();

/// Loop-free multigraph on vertices 0..n-1. Parallel edges are individual
/// objects with dense integer ids in insertion order; removal tombstones the
/// id so that derived graphs (G-e, G-M, induced subgraphs, H+e) stay
/// id-aligned with their host and colorings can be carried across.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);

    EdgeId add_edge(Vertex u, Vertex v);
    void remove_edge(EdgeId e);
    void restore_edge(EdgeId e);

    int vertex_count() const { return n_; }
    int edge_count() const { return alive_; }
    /// Total ids ever allocated, including tombstones. Arrays indexed by
    /// EdgeId should use this size.
    int edge_slots() const { return static_cast<int>(edges_.size()); }

    bool has_edge(EdgeId e) const {
        return e >= 0 && e < edge_slots() && edges_[e].alive;
    }
    std::pair<Vertex, Vertex> endpoints(EdgeId e) const;
    Vertex other_end(EdgeId e, Vertex v) const;
    const std::vector<EdgeId>& incident(Vertex v) const;
    std::vector<EdgeId> edge_ids() const;

    int degree(Vertex v) const;
    int max_degree() const;
    int multiplicity(Vertex u, Vertex v) const;
    int max_multiplicity() const;
    std::vector<EdgeId> edges_between(Vertex u, Vertex v) const;

    Multigraph minus_edge(EdgeId e) const;
    Multigraph minus_edges(const EdgeSet& drop) const;
    /// Removes the vertices' incident edges; vertex slots remain (isolated).
    Multigraph minus_vertices(const VertexSet& drop) const;
    /// Keeps only edges with both endpoints in `keep`.
    Multigraph induced(const VertexSet& keep) const;

    std::vector<int> vertex_distances(Vertex s) const;
    int vertex_distance(Vertex s, Vertex t) const;

    /// Length of a shortest path between an endvertex of e and one of f;
    /// 0 when the edges share an endpoint, kInfinity when disconnected.
    int edge_distance(EdgeId e, EdgeId f) const;
    bool is_distance_matching(const EdgeSet& m, int t) const;

    /// Edges with exactly one endpoint in x.
    EdgeSet boundary(const VertexSet& x) const;
    /// Diameter of the subgraph induced by x; kInfinity if disconnected.
    int diameter(const VertexSet& x) const;

    bool operator==(const Multigraph& o) const;

private:
    struct Edge {
        Vertex u, v;
        bool alive;
    };

    void check_vertex(Vertex v) const;
    void check_edge(EdgeId e) const;

    int n_ = 0;
    int alive_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adj_;
};

}  // namespace mgcolor
