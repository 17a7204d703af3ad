#include "mgcolor/base_color.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "mgcolor/fans.hpp"

namespace mgcolor {

namespace {

// ---------------------------------------------------------------------------
// Exact backtracking solver.
// ---------------------------------------------------------------------------

std::vector<EdgeId> solver_edge_order(const Multigraph& g) {
    std::vector<EdgeId> order = g.edge_ids();
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        auto [au, av] = g.endpoints(a);
        auto [bu, bv] = g.endpoints(b);
        int da = g.degree(au) + g.degree(av);
        int db = g.degree(bu) + g.degree(bv);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

bool backtrack(const Multigraph& g, const std::vector<EdgeId>& order,
               const std::vector<int>& color_try, size_t pos,
               std::vector<unsigned>& used_at, PartialEdgeColoring& col,
               long long& nodes) {
    if (pos == order.size()) return true;
    EdgeId e = order[pos];
    auto [u, v] = g.endpoints(e);
    for (int c : color_try) {
        unsigned bit = 1u << c;
        if ((used_at[u] | used_at[v]) & bit) continue;
        if (--nodes < 0) throw ResourceError("edge coloring budget exhausted");
        used_at[u] |= bit;
        used_at[v] |= bit;
        col.assign(e, c);
        if (backtrack(g, order, color_try, pos + 1, used_at, col, nodes))
            return true;
        used_at[u] &= ~bit;
        used_at[v] &= ~bit;
        col.unassign(e);
    }
    return false;
}

std::optional<PartialEdgeColoring> exact_k_coloring(
    const Multigraph& g, int k, long long& nodes,
    const std::vector<int>& color_try) {
    if (k > 30) throw ResourceError("palette beyond solver bitmask width");
    PartialEdgeColoring col(g, k);
    if (g.edge_count() == 0) return col;
    if (k == 0) return std::nullopt;
    auto order = solver_edge_order(g);
    std::vector<unsigned> used_at(g.vertex_count(), 0);
    if (backtrack(g, order, color_try, 0, used_at, col, nodes)) return col;
    return std::nullopt;
}

std::vector<int> ascending_colors(int k) {
    std::vector<int> out(k);
    std::iota(out.begin(), out.end(), 1);
    return out;
}

}  // namespace

ChiResult exact_chromatic_index(const Multigraph& g, long long budget) {
    if (g.edge_count() == 0) return {0, PartialEdgeColoring(g, 0)};
    int lb = g.max_degree();
    int ub = g.max_degree() + g.max_multiplicity();
    long long nodes = budget;
    for (int k = lb; k <= ub; ++k) {
        auto col = exact_k_coloring(g, k, nodes, ascending_colors(k));
        if (col) return {k, *col};
    }
    throw DefectError("chromatic index above the Vizing-Gupta bound");
}

std::optional<PartialEdgeColoring> k_edge_color(const Multigraph& g, int k,
                                                long long budget) {
    if (k < 0) throw InputError("negative palette size");
    if (g.edge_count() == 0) return PartialEdgeColoring(g, k);
    if (k >= g.max_degree() + g.max_multiplicity()) {
        PartialEdgeColoring col = vizing_gupta_color(g);
        col.widen_palette(k);
        return col;
    }
    long long nodes = budget;
    return exact_k_coloring(g, k, nodes, ascending_colors(k));
}

std::optional<PartialEdgeColoring> k_edge_color_seeded(const Multigraph& g,
                                                       int k,
                                                       unsigned long long seed,
                                                       long long budget) {
    if (k < 0) throw InputError("negative palette size");
    if (g.edge_count() == 0) return PartialEdgeColoring(g, k);
    std::mt19937_64 rng(seed);
    auto colors = ascending_colors(k);
    std::shuffle(colors.begin(), colors.end(), rng);
    long long nodes = budget;
    return exact_k_coloring(g, k, nodes, colors);
}

// ---------------------------------------------------------------------------
// Constructive Vizing-Gupta coloring.
// ---------------------------------------------------------------------------

namespace {

struct FanState {
    Vertex x;
    EdgeId anchor;
    std::vector<std::pair<EdgeId, Vertex>> entries;  // entry 0 is (anchor, y0)
};

// Shortest valid linear sequence from y0 to `target` over the fan entries,
// evaluated against the current coloring; nullopt if unreachable.
std::optional<std::vector<std::pair<EdgeId, Vertex>>> fan_sequence(
    const Multigraph& g, const PartialEdgeColoring& col, const FanState& fan,
    Vertex target) {
    Vertex y0 = fan.entries.front().second;
    if (target == y0) return std::vector<std::pair<EdgeId, Vertex>>{};
    std::map<Vertex, std::pair<Vertex, EdgeId>> parent;
    std::deque<Vertex> queue{y0};
    std::set<Vertex> visited{y0};
    while (!queue.empty() && !visited.count(target)) {
        Vertex w = queue.front();
        queue.pop_front();
        for (size_t i = 1; i < fan.entries.size(); ++i) {
            auto [edge, z] = fan.entries[i];
            if (visited.count(z)) continue;
            if (!col.is_missing(g, w, col.color(edge))) continue;
            visited.insert(z);
            parent[z] = {w, edge};
            queue.push_back(z);
        }
    }
    if (!visited.count(target)) return std::nullopt;
    std::vector<std::pair<EdgeId, Vertex>> rev;
    Vertex cur = target;
    while (cur != y0) {
        auto [w, edge] = parent.at(cur);
        rev.emplace_back(edge, cur);
        cur = w;
    }
    return std::vector<std::pair<EdgeId, Vertex>>(rev.rbegin(), rev.rend());
}

// Rotate the anchor's missing color down the sequence and finish the last
// edge with `final_color`: anchor takes e_1's color, e_t takes e_{t+1}'s,
// the last edge takes final_color. With an empty sequence this just colors
// the anchor.
void rotate_and_finish(PartialEdgeColoring& col, EdgeId anchor,
                       const std::vector<std::pair<EdgeId, Vertex>>& seq,
                       int final_color) {
    if (seq.empty()) {
        col.assign(anchor, final_color);
        return;
    }
    std::vector<int> old(seq.size());
    for (size_t t = 0; t < seq.size(); ++t) old[t] = col.color(seq[t].first);
    col.assign(anchor, old[0]);
    for (size_t t = 0; t + 1 < seq.size(); ++t)
        col.assign(seq[t].first, old[t + 1]);
    col.assign(seq.back().first, final_color);
}

void swap_chain(PartialEdgeColoring& col, const KempeChain& ch) {
    for (EdgeId e : ch.edges) {
        int c = col.color(e);
        col.assign(e, c == ch.alpha ? ch.beta : ch.alpha);
    }
}

int smallest_missing(const Multigraph& g, const PartialEdgeColoring& col,
                     Vertex v) {
    for (int c = 1; c <= col.palette(); ++c)
        if (col.is_missing(g, v, c)) return c;
    return 0;
}

int smallest_common_missing(const Multigraph& g,
                            const PartialEdgeColoring& col, Vertex a,
                            Vertex b) {
    for (int c = 1; c <= col.palette(); ++c)
        if (col.is_missing(g, a, c) && col.is_missing(g, b, c)) return c;
    return 0;
}

// Color the uncolored edge e0; every other colored edge stays proper.
void color_one_edge(const Multigraph& g, PartialEdgeColoring& col,
                    EdgeId e0) {
    auto [u, v] = g.endpoints(e0);
    Vertex x = std::min(u, v);
    Vertex y0 = std::max(u, v);

    FanState fan{x, e0, {{e0, y0}}};
    std::set<EdgeId> used{e0};

    while (true) {
        // (a) Some fan vertex shares a missing color with x: rotate, done.
        // Scanning every entry each round keeps this simple; fans are tiny.
        for (auto& [e, ys] : fan.entries) {
            (void)e;
            int beta = smallest_common_missing(g, col, x, ys);
            if (beta == 0) continue;
            auto seq = fan_sequence(g, col, fan, ys);
            if (!seq) throw DefectError("fan vertex unreachable by sequence");
            rotate_and_finish(col, e0, *seq, beta);
            return;
        }

        // (b) Two distinct fan vertices share a missing color: one Kempe
        // swap on the chain avoiding x creates a common missing color with
        // x, and the fan prefix still reaches the flipped vertex.
        {
            Vertex w = -1, vtx = -1;
            int beta = 0;
            for (size_t s = 1; s < fan.entries.size() && beta == 0; ++s) {
                Vertex ys = fan.entries[s].second;
                for (size_t r = 0; r < s && beta == 0; ++r) {
                    Vertex yr = fan.entries[r].second;
                    if (yr == ys) continue;
                    int c = smallest_common_missing(g, col, yr, ys);
                    if (c != 0) {
                        beta = c;
                        w = yr;
                        vtx = ys;
                    }
                }
            }
            if (beta != 0) {
                int alpha = smallest_missing(g, col, x);
                if (alpha == 0)
                    throw DefectError("fan center has no missing color");
                KempeChain pw = kempe_chain(g, col, w, alpha, beta);
                Vertex target;
                if (pw.contains_vertex(x)) {
                    KempeChain pv = kempe_chain(g, col, vtx, alpha, beta);
                    swap_chain(col, pv);
                    target = vtx;
                } else {
                    swap_chain(col, pw);
                    target = w;
                }
                auto seq = fan_sequence(g, col, fan, target);
                if (!seq)
                    throw DefectError("swap target unreachable by sequence");
                rotate_and_finish(col, e0, *seq, alpha);
                return;
            }
        }

        // Grow the fan by the smallest eligible edge.
        EdgeId next = -1;
        for (EdgeId f : g.incident(x)) {
            if (used.count(f) || !col.is_colored(f)) continue;
            bool eligible = false;
            for (auto& [e, ys] : fan.entries) {
                (void)e;
                if (col.is_missing(g, ys, col.color(f))) {
                    eligible = true;
                    break;
                }
            }
            if (eligible && (next == -1 || f < next)) next = f;
        }
        if (next == -1)
            throw DefectError("maximal fan without a recoloring move");
        used.insert(next);
        fan.entries.emplace_back(next, g.other_end(next, x));
    }
}

}  // namespace

PartialEdgeColoring vizing_gupta_color(const Multigraph& g) {
    int k = g.edge_count() == 0 ? 0 : g.max_degree() + g.max_multiplicity();
    PartialEdgeColoring col(g, k);
    for (EdgeId e : g.edge_ids()) color_one_edge(g, col, e);
    if (!col.is_proper(g) || !col.total_on(g))
        throw DefectError("constructive coloring failed properness");
    return col;
}

// ---------------------------------------------------------------------------
// Saturated matchings.
// ---------------------------------------------------------------------------

namespace {

bool edge_fully_saturated(const Multigraph& g, EdgeId e, int delta, int mu) {
    auto [u, v] = g.endpoints(e);
    return g.degree(u) == delta && g.degree(v) == delta &&
           g.multiplicity(u, v) == mu;
}

int chi_of(const Multigraph& g, long long budget) {
    return exact_chromatic_index(g, budget).chi;
}

}  // namespace

std::pair<SaturatedMatching, PartialEdgeColoring> saturated_matching(
    const Multigraph& g, const EdgeSet& m, long long budget) {
    const int delta = g.max_degree();
    const int mu = g.max_multiplicity();
    if (mu < 2) throw InputError("saturated matching needs multiplicity >= 2");
    if (!g.is_distance_matching(m, 1))
        throw InputError("precolored edge set is not a matching");
    const int k = delta + mu - 1;

    Multigraph g_minus_m = g.minus_edges(m);
    if (chi_of(g_minus_m, budget) != delta + mu)
        throw InputError("chi'(g - m) is not maxdeg + maxmult");

    VertexSet vm;
    for (EdgeId e : m) {
        auto [u, v] = g.endpoints(e);
        vm.insert(u);
        vm.insert(v);
    }

    // Greedy maximal matching of fully saturated edges avoiding V(m).
    EdgeSet mstar;
    VertexSet taken = vm;
    for (EdgeId e : g.edge_ids()) {
        if (m.count(e)) continue;
        auto [u, v] = g.endpoints(e);
        if (taken.count(u) || taken.count(v)) continue;
        if (!edge_fully_saturated(g, e, delta, mu)) continue;
        mstar.insert(e);
        taken.insert(u);
        taken.insert(v);
    }

    auto removed = [&](const EdgeSet& ms) {
        EdgeSet drop = m;
        drop.insert(ms.begin(), ms.end());
        return g.minus_edges(drop);
    };

    if (chi_of(removed(mstar), budget) != k)
        throw DefectError("saturated matching did not drop the index");

    // Drop redundant edges until every member is k-critical.
    bool changed = true;
    while (changed) {
        changed = false;
        for (EdgeId e : mstar) {
            EdgeSet without = mstar;
            without.erase(e);
            if (chi_of(removed(without), budget) == k) {
                mstar = without;
                changed = true;
                break;
            }
        }
    }
    if (mstar.empty())
        throw DefectError("saturated matching emptied out");

    // Replacement loop: every edge must be fully saturated inside its dense
    // subgraph; a failing edge is swapped for a fully saturated edge found
    // through two chained multi-fans.
    int rounds = 0;
    const int round_cap = std::max(1, g.edge_count());
    while (true) {
        if (++rounds > round_cap)
            throw DefectError("saturated-matching replacement did not settle");
        bool all_ok = true;
        for (EdgeId e : mstar) {
            EdgeSet without = mstar;
            without.erase(e);
            EdgeSet drop = m;
            drop.insert(without.begin(), without.end());
            Multigraph host = g.minus_edges(drop);  // contains e
            DenseSubgraph he = critical_dense_subgraph(host, e, k, budget);
            Multigraph hplus = host.induced(he.vertices);
            if (edge_fully_saturated(hplus, e, delta, mu)) continue;

            all_ok = false;
            auto phi = k_edge_color(removed(mstar), k, budget);
            if (!phi) throw DefectError("lost the k-coloring of the remainder");
            auto [x, y] = g.endpoints(e);
            if (x > y) std::swap(x, y);

            MultiFan fx = build_multifan(hplus, *phi, x, e);
            Vertex x1 = -1;
            for (Vertex z : fx.fan_vertices()) {
                if (z == x || z == y) continue;
                if (hplus.degree(z) == delta &&
                    hplus.multiplicity(x, z) == mu) {
                    x1 = z;
                    break;
                }
            }
            if (x1 == -1)
                throw DefectError("no saturated neighbor in the first fan");
            EdgeId exx1 = -1;
            if (fx.anchor_target == x1) exx1 = fx.anchor;
            for (auto& [fe, fy] : fx.entries)
                if (fy == x1 && (exx1 == -1 || fe < exx1)) exx1 = fe;

            auto psi = k_edge_color(hplus.minus_edge(exx1), k, budget);
            if (!psi)
                throw DefectError("fan edge is not k-critical as promised");
            MultiFan f1 = build_multifan(hplus, *psi, x1, exx1);
            EdgeId replacement = -1;
            for (Vertex z : f1.fan_vertices()) {
                if (z == x1 || z == x) continue;
                if (hplus.degree(z) == delta &&
                    hplus.multiplicity(x1, z) == mu) {
                    replacement = hplus.edges_between(x1, z).front();
                    break;
                }
            }
            if (replacement == -1)
                throw DefectError("no saturated edge in the second fan");

            mstar.erase(e);
            mstar.insert(replacement);
            if (chi_of(removed(mstar), budget) != k)
                throw DefectError("replacement broke the chromatic index");
            break;  // recertify everything from scratch
        }
        if (all_ok) break;
    }

    if (!g.is_distance_matching(mstar, 1))
        throw DefectError("saturated matching lost matching-ness");
    for (EdgeId e : mstar) {
        auto [u, v] = g.endpoints(e);
        if (vm.count(u) || vm.count(v))
            throw DefectError("saturated matching touches the precolored set");
    }

    SaturatedMatching sm;
    sm.mstar = mstar;
    for (EdgeId e : mstar) {
        EdgeSet without = mstar;
        without.erase(e);
        EdgeSet drop = m;
        drop.insert(without.begin(), without.end());
        Multigraph host = g.minus_edges(drop);
        SaturatedEdgeRecord rec;
        rec.edge = e;
        rec.dense = critical_dense_subgraph(host, e, k, budget);
        rec.fully_saturated = edge_fully_saturated(
            host.induced(rec.dense.vertices), e, delta, mu);
        sm.records.push_back(rec);
    }
    auto phi = k_edge_color(removed(mstar), k, budget);
    if (!phi) throw DefectError("final remainder lost its k-coloring");
    return {sm, *phi};
}

}  // namespace mgcolor
