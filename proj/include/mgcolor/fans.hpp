#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/multigraph.hpp"

namespace mgcolor {

/// Multi-fan at a center x with respect to an anchor edge e in E(x,y0) and a
/// coloring: every later edge's color is missing at some earlier fan vertex.
/// Vertices may repeat; edges are distinct. The anchor may be colored (the
/// generalized definition) or uncolored.
struct MultiFan {
    Vertex center = -1;
    EdgeId anchor = -1;
    Vertex anchor_target = -1;  // y0
    std::vector<std::pair<EdgeId, Vertex>> entries;  // (e_i, y_i), i >= 1
    std::optional<int> forbidden;

    /// Distinct vertices of V(F) \ {center}, in first-appearance order.
    std::vector<Vertex> fan_vertices() const;
    bool contains_vertex(Vertex v) const;
    /// e_F(x, y): number of fan edges (anchor included) joining center and y.
    int fan_multiplicity(Vertex y) const;
};

/// Linear sequence (y0, e_1, y_1, ..., e_s, y_s) at a center x: distinct
/// vertices, distinct edges, e_i in E(x, y_i), color(e_i) missing at y_{i-1}.
struct LinearSequence {
    Vertex center = -1;
    Vertex start = -1;  // y0
    std::vector<std::pair<EdgeId, Vertex>> steps;

    int length() const { return static_cast<int>(steps.size()); }
    Vertex last() const { return steps.empty() ? start : steps.back().second; }
};

/// Grows a maximal fan deterministically (smallest eligible edge id first).
/// With `forbidden` set, grows a fan that is maximal among fans without any
/// forbidden-colored edge.
MultiFan build_multifan(const Multigraph& g, const PartialEdgeColoring& c,
                        Vertex x, EdgeId e,
                        std::optional<int> forbidden = std::nullopt);

/// Shortest linear sequence from y0 to target inside the fan (BFS over fan
/// edges, smallest edge id first).
LinearSequence linear_sequence_to(const Multigraph& g,
                                  const PartialEdgeColoring& c,
                                  const MultiFan& f, Vertex target);

/// Shifting from y_from to y_to: e_t takes the color of e_{t+1} for
/// from <= t <= to-1 (1-based). e_to keeps its color, so the result has
/// exactly one conflict at the center; callers uncolor or recolor e_to.
PartialEdgeColoring shift(const Multigraph& g, const PartialEdgeColoring& c,
                          const LinearSequence& s, int from, int to);

}  // namespace mgcolor
