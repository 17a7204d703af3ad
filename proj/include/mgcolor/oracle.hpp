#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgcolor/coloring.hpp"
#include "mgcolor/multigraph.hpp"
#include "mgcolor/precoloring.hpp"

namespace mgcolor {

/// Exhaustive search for a proper k-edge-coloring of g agreeing with the
/// precoloring; deliberately naive (edges by ascending id) so it stays an
/// auditable source of ground truth, independent of the constructive path.
std::optional<PartialEdgeColoring> brute_force_extension(
    const Multigraph& g, const Precoloring& p, int k,
    long long budget = kDefaultBudget);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> diagnostics;
};

/// True iff c is total on E(g), proper, within palette 1..maxdeg+maxmult,
/// and agrees with the precoloring on the matching.
VerifyResult verify_extension(const Multigraph& g, const Precoloring& p,
                              const PartialEdgeColoring& c);

}  // namespace mgcolor
