#pragma once

#include <map>

#include "mgcolor/multigraph.hpp"

namespace mgcolor {

/// A precolored distance-3 matching: edges of the matching plus their fixed
/// colors from the palette 1..maxdeg+maxmult.
struct Precoloring {
    EdgeSet matching;
    std::map<EdgeId, int> colors;

    int color_of(EdgeId e) const {
        auto it = colors.find(e);
        return it == colors.end() ? 0 : it->second;
    }
};

/// Checks the distance-3 matching property and the palette bounds; throws
/// InputError on violation.
void validate_precoloring(const Multigraph& g, const Precoloring& p);

}  // namespace mgcolor
