#pragma once

#include <string>

#include "mgcolor/coloring.hpp"
#include "mgcolor/extend.hpp"
#include "mgcolor/multigraph.hpp"
#include "mgcolor/precoloring.hpp"

namespace mgcolor {

/// Graph file: header `mgraph <n>`, edge lines `e <u> <v> [mult]` (mult
/// expands to that many parallel edges with consecutive ids), `#` comments.
Multigraph parse_graph(const std::string& text);
std::string serialize_graph(const Multigraph& g);

/// Precoloring file: lines `p <edge-id> <color>`; validated as a distance-3
/// matching over the palette of the referenced graph.
Precoloring parse_precoloring(const std::string& text, const Multigraph& g);
std::string serialize_precoloring(const Precoloring& p);

/// Coloring file: lines `c <edge-id> <color>`, sorted by edge id.
PartialEdgeColoring parse_coloring(const std::string& text,
                                   const Multigraph& g);
std::string serialize_coloring(const Multigraph& g,
                               const PartialEdgeColoring& c);

/// JSON trace: array of {op, case, edges, colors, e1_size, e2_size} with
/// fixed key order.
std::string trace_to_json(const Trace& t);
Trace trace_from_json(const std::string& text);

/// Applies the trace's recoloring entries from an all-uncolored start; the
/// result is the final coloring the trace's producer emitted.
PartialEdgeColoring replay_trace(const Multigraph& g, const Trace& t);

}  // namespace mgcolor
