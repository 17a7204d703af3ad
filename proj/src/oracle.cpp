#include "mgcolor/oracle.hpp"

#include <string>

namespace mgcolor {

namespace {

bool oracle_backtrack(const Multigraph& g, const std::vector<EdgeId>& order,
                      size_t pos, int k, PartialEdgeColoring& col,
                      long long& nodes) {
    if (pos == order.size()) return true;
    EdgeId e = order[pos];
    auto [u, v] = g.endpoints(e);
    for (int c = 1; c <= k; ++c) {
        bool clash = false;
        for (EdgeId f : g.incident(u))
            if (f != e && col.color(f) == c) {
                clash = true;
                break;
            }
        if (!clash)
            for (EdgeId f : g.incident(v))
                if (f != e && col.color(f) == c) {
                    clash = true;
                    break;
                }
        if (clash) continue;
        if (--nodes < 0) throw ResourceError("oracle budget exhausted");
        col.assign(e, c);
        if (oracle_backtrack(g, order, pos + 1, k, col, nodes)) return true;
        col.unassign(e);
    }
    return false;
}

}  // namespace

std::optional<PartialEdgeColoring> brute_force_extension(const Multigraph& g,
                                                         const Precoloring& p,
                                                         int k,
                                                         long long budget) {
    PartialEdgeColoring col(g, k);
    for (EdgeId e : p.matching) {
        int c = p.color_of(e);
        if (c < 1 || c > k)
            throw InputError("precoloring color outside palette");
        col.assign(e, c);
    }
    std::vector<EdgeId> order;
    for (EdgeId e : g.edge_ids())
        if (!p.matching.count(e)) order.push_back(e);
    long long nodes = budget;
    // Precolored edges must already be mutually consistent.
    for (EdgeId e : p.matching) {
        auto [u, v] = g.endpoints(e);
        for (Vertex w : {u, v})
            for (EdgeId f : g.incident(w))
                if (f != e && col.color(f) == col.color(e)) return std::nullopt;
    }
    if (oracle_backtrack(g, order, 0, k, col, nodes)) return col;
    return std::nullopt;
}

VerifyResult verify_extension(const Multigraph& g, const Precoloring& p,
                              const PartialEdgeColoring& c) {
    VerifyResult res;
    const int palette_cap = g.max_degree() + g.max_multiplicity();
    for (EdgeId e : g.edge_ids()) {
        int col = c.color(e);
        if (col == kUncolored)
            res.diagnostics.push_back("incomplete: edge " + std::to_string(e) +
                                      " uncolored");
        else if (col < 1 || col > palette_cap)
            res.diagnostics.push_back("palette: edge " + std::to_string(e) +
                                      " colored " + std::to_string(col) +
                                      " outside 1.." +
                                      std::to_string(palette_cap));
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i) {
            if (c.color(inc[i]) == kUncolored) continue;
            for (size_t j = i + 1; j < inc.size(); ++j) {
                if (c.color(inc[i]) == c.color(inc[j]))
                    res.diagnostics.push_back(
                        "conflict: edges " + std::to_string(inc[i]) + " and " +
                        std::to_string(inc[j]) + " share vertex " +
                        std::to_string(v) + " and color " +
                        std::to_string(c.color(inc[i])));
            }
        }
    }
    for (EdgeId e : p.matching) {
        if (c.color(e) != p.color_of(e))
            res.diagnostics.push_back(
                "disagreement: edge " + std::to_string(e) + " colored " +
                std::to_string(c.color(e)) + " but precolored " +
                std::to_string(p.color_of(e)));
    }
    res.ok = res.diagnostics.empty();
    return res;
}

}  // namespace mgcolor
