#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mgcolor/density.hpp"
#include "mgcolor/multigraph.hpp"

namespace mgcolor {

constexpr int kUncolored = 0;

/// Edge -> color assignment over palette 1..k with an explicit uncolored
/// state. Colorings carry no graph pointer: edge ids are stable across the
/// derived graph views (G-e, G-M, H+e), so one assignment array serves them
/// all and every query takes the view it should be read against. Improper
/// assignments are representable on purpose; properness is checked, not
/// enforced by the type.
class PartialEdgeColoring {
public:
    PartialEdgeColoring() = default;
    PartialEdgeColoring(const Multigraph& g, int palette);

    int palette() const { return k_; }
    void widen_palette(int k);

    int color(EdgeId e) const;
    bool is_colored(EdgeId e) const { return color(e) != kUncolored; }
    void assign(EdgeId e, int c);
    void unassign(EdgeId e);

    int colored_count(const Multigraph& g) const;
    bool total_on(const Multigraph& g) const;

    std::set<int> present(const Multigraph& g, Vertex v) const;
    std::set<int> missing(const Multigraph& g, Vertex v) const;
    bool is_missing(const Multigraph& g, Vertex v, int c) const;
    /// The unique c-colored edge at v, if any.
    std::optional<EdgeId> edge_with_color(const Multigraph& g, Vertex v,
                                          int c) const;

    std::vector<std::pair<EdgeId, EdgeId>> conflicts(const Multigraph& g) const;
    bool is_proper(const Multigraph& g) const;

    /// Colors kept only on edges alive in h; everything else uncolored.
    PartialEdgeColoring restricted_to(const Multigraph& h) const;

    bool operator==(const PartialEdgeColoring& o) const = default;

private:
    int k_ = 0;
    std::vector<int> color_;
};

struct VertexSetFlags {
    bool elementary = false;
    bool closed = false;
    bool strongly_closed = false;
    std::string diagnostic;  // set when closure fails, e.g. uncolored boundary
};

/// Elementary / closed / strongly closed classification of a vertex set.
VertexSetFlags classify_vertex_set(const Multigraph& g,
                                   const PartialEdgeColoring& c,
                                   const VertexSet& x);

struct KempeChain {
    int alpha = 0;
    int beta = 0;
    enum class Shape { path, cycle } shape = Shape::path;
    /// Path: vertices v0..vm with edges[i] joining vertices[i], vertices[i+1].
    /// Cycle: m vertices, m edges, edges[m-1] closing back to vertices[0].
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    bool contains_vertex(Vertex v) const;
    bool contains_edge(EdgeId e) const;
    bool operator==(const KempeChain& o) const = default;
};

/// The (alpha,beta)-component containing v; a vertex incident to neither
/// color gives a degenerate single-vertex path. Chains are canonicalized
/// (paths start at the smaller endvertex) so equal components compare equal.
KempeChain kempe_chain(const Multigraph& g, const PartialEdgeColoring& c,
                       Vertex v, int alpha, int beta);

/// Swaps alpha and beta on the subchain of ch between a and b (full-chain
/// swap when a, b are the endvertices; cycles always swap fully). The result
/// can be improper when a or b is interior.
PartialEdgeColoring kempe_swap_subchain(const Multigraph& g,
                                        const PartialEdgeColoring& c,
                                        const KempeChain& ch, Vertex a,
                                        Vertex b);

enum class MergeMode { plain, protect_color };

/// Renames color classes of psi on E(h) so that the combination with phi
/// (the coloring outside h) is proper; with protect_color(i) the i-class is
/// kept fixed and at most one i-adjacency between E(h) and the boundary can
/// remain. The renaming is the lexicographically least feasible permutation.
/// Boundary colors above psi's palette never constrain the renaming.
PartialEdgeColoring merge_colorings(const Multigraph& g, const DenseSubgraph& h,
                                    const PartialEdgeColoring& psi,
                                    const PartialEdgeColoring& phi,
                                    MergeMode mode, int protected_color = 0);

}  // namespace mgcolor
