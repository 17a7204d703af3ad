#include "mgcolor/extend.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <string>

#include "mgcolor/fans.hpp"

namespace mgcolor {

std::string case_name(CaseId c) {
    switch (c) {
        case CaseId::op1: return "Op-I";
        case CaseId::op2: return "Op-II";
        case CaseId::op3: return "Op-III";
        case CaseId::case2: return "Case-2";
        case CaseId::case31: return "Case-3.1";
        case CaseId::case32: return "Case-3.2";
        case CaseId::case331: return "Case-3.3.1";
        case CaseId::case332: return "Case-3.3.2";
    }
    return "?";
}

void validate_precoloring(const Multigraph& g, const Precoloring& p) {
    const int palette = g.max_degree() + g.max_multiplicity();
    for (EdgeId e : p.matching) {
        if (!g.has_edge(e))
            throw InputError("precolored edge " + std::to_string(e) +
                             " not in graph");
        int c = p.color_of(e);
        if (c < 1 || c > palette)
            throw InputError("precoloring color " + std::to_string(c) +
                             " outside palette 1.." + std::to_string(palette));
    }
    if (p.colors.size() != p.matching.size())
        throw InputError("precoloring colors do not match the edge set");
    for (auto& [e, c] : p.colors) {
        (void)c;
        if (!p.matching.count(e))
            throw InputError("color given for edge outside the matching");
    }
    if (!g.is_distance_matching(p.matching, 3))
        throw InputError("precolored edges are not a distance-3 matching");
}

const ImproperRecord* ImproperReport::find(EdgeId f, Vertex endpoint) const {
    for (const auto& r : records)
        if (r.precolored == f && r.endpoint == endpoint) return &r;
    return nullptr;
}

bool ImproperReport::any_t2() const {
    for (const auto& r : records)
        if (r.t2) return true;
    return false;
}

ImproperReport classify_improper(const Multigraph& g, const Precoloring& p,
                                 const ExtensionTriple& t) {
    EdgeSet drop = p.matching;
    drop.insert(t.mstar.begin(), t.mstar.end());
    Multigraph g_rem = g.minus_edges(drop);

    VertexSet vstar;
    for (EdgeId e : t.mstar) {
        auto [a, b] = g.endpoints(e);
        vstar.insert(a);
        vstar.insert(b);
    }

    ImproperReport rep;
    for (EdgeId f : p.matching) {
        int i = p.color_of(f);
        auto [fu, fv] = g.endpoints(f);
        for (Vertex u : {std::min(fu, fv), std::max(fu, fv)}) {
            for (EdgeId q : g_rem.incident(u)) {
                if (t.phi.color(q) != i) continue;
                Vertex other = g_rem.other_end(q, u);
                bool t2 = vstar.count(u) || vstar.count(other);
                // A parallel copy of f collides at both endpoints; its other
                // end is in V(M), never in V(M*), so it is always T1.
                rep.records.push_back({f, u, q, t2});
                if (t2)
                    rep.e2.insert(q);
                else
                    rep.e1.insert(q);
            }
        }
    }
    std::sort(rep.records.begin(), rep.records.end());
    return rep;
}

namespace {

int palette_of(const Multigraph& g) {
    return g.max_degree() + g.max_multiplicity();
}

Multigraph remainder(const Multigraph& g, const Precoloring& p,
                     const EdgeSet& mstar) {
    EdgeSet drop = p.matching;
    drop.insert(mstar.begin(), mstar.end());
    return g.minus_edges(drop);
}

EdgeSet delta_mu_class(const Multigraph& g, const Precoloring& p) {
    EdgeSet out;
    int kp1 = palette_of(g);
    for (EdgeId f : p.matching)
        if (p.color_of(f) == kp1) out.insert(f);
    return out;
}

bool edges_form_matching(const Multigraph& g, const EdgeSet& edges) {
    VertexSet seen;
    for (EdgeId e : edges) {
        auto [u, v] = g.endpoints(e);
        if (seen.count(u) || seen.count(v)) return false;
        seen.insert(u);
        seen.insert(v);
    }
    return true;
}

}  // namespace

TripleStatus triple_status(const Multigraph& g, const Precoloring& p,
                           const ExtensionTriple& t, std::string* reason,
                           long long budget) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return TripleStatus::infeasible_precondition;
    };
    const int kp1 = palette_of(g);
    const int k = kp1 - 1;

    Multigraph g_rem = remainder(g, p, t.mstar);
    if (!t.phi.total_on(g_rem)) return fail("coloring not total on remainder");
    if (!t.phi.is_proper(g_rem)) return fail("coloring not proper");
    for (EdgeId e : g_rem.edge_ids()) {
        bool is_special = t.phi.color(e) == kp1;
        if (is_special != static_cast<bool>(t.special.count(e)))
            return fail("special class out of sync with the coloring");
    }
    if (!g.is_distance_matching(t.mstar, 1))
        return fail("M* is not a matching");

    // (a) the final color class must be a matching.
    EdgeSet cls = delta_mu_class(g, p);
    cls.insert(t.mstar.begin(), t.mstar.end());
    cls.insert(t.special.begin(), t.special.end());
    if (!edges_form_matching(g, cls))
        return fail("condition (a): top color class is not a matching");

    ImproperReport rep = classify_improper(g, p, t);

    // (b) + (c) for every M* edge adjacent to an E2 collider.
    VertexSet e2_verts;
    for (EdgeId q : rep.e2) {
        auto [u, v] = g.endpoints(q);
        e2_verts.insert(u);
        e2_verts.insert(v);
    }
    for (EdgeId e : t.mstar) {
        auto [u, v] = g.endpoints(e);
        if (!e2_verts.count(u) && !e2_verts.count(v)) continue;
        EdgeSet others = t.mstar;
        others.erase(e);
        EdgeSet drop = p.matching;
        drop.insert(others.begin(), others.end());
        Multigraph host = g.minus_edges(drop);
        DenseSubgraph he;
        try {
            he = critical_dense_subgraph(host, e, k, budget);
        } catch (const InputError& ex) {
            return fail("condition (b): " + std::string(ex.what()));
        }
        Multigraph hplus = host.induced(he.vertices);
        auto [x, y] = g.endpoints(e);
        if (hplus.degree(x) != g.max_degree() ||
            hplus.degree(y) != g.max_degree() ||
            hplus.multiplicity(x, y) != g.max_multiplicity())
            return fail("condition (b): M* edge not fully saturated");
        std::set<int> seen;
        for (EdgeId b : he.boundary) {
            int c = t.phi.color(b);
            if (c == kUncolored)
                return fail("condition (c): uncolored boundary edge");
            if (seen.count(c))
                return fail("condition (c): duplicate boundary color " +
                            std::to_string(c));
            seen.insert(c);
        }
    }

    if (rep.e1.empty() && rep.e2.empty()) return TripleStatus::feasible;
    return TripleStatus::prefeasible;
}

// ===========================================================================
// Case operations.
// ===========================================================================

namespace {

using Steps = std::vector<std::pair<EdgeId, Vertex>>;

// BFS for a shortest linear sequence from the fan's y0 to `target`, using
// only fan edges passing `edge_ok` and vertices passing `vertex_ok`.
std::optional<Steps> fan_bfs(const Multigraph& view,
                             const PartialEdgeColoring& col,
                             const MultiFan& fan, Vertex target,
                             const std::function<bool(EdgeId)>& edge_ok,
                             const std::function<bool(Vertex)>& vertex_ok) {
    Vertex y0 = fan.anchor_target;
    if (!vertex_ok(y0)) return std::nullopt;
    if (target == y0) return Steps{};
    std::vector<std::pair<EdgeId, Vertex>> entries = fan.entries;
    std::sort(entries.begin(), entries.end());
    std::map<Vertex, std::pair<Vertex, EdgeId>> parent;
    std::deque<Vertex> queue{y0};
    std::set<Vertex> visited{y0};
    while (!queue.empty() && !visited.count(target)) {
        Vertex w = queue.front();
        queue.pop_front();
        for (auto& [edge, z] : entries) {
            if (visited.count(z) || !edge_ok(edge) || !vertex_ok(z)) continue;
            if (!col.is_missing(view, w, col.color(edge))) continue;
            visited.insert(z);
            parent[z] = {w, edge};
            queue.push_back(z);
        }
    }
    if (!visited.count(target)) return std::nullopt;
    Steps rev;
    Vertex cur = target;
    while (cur != y0) {
        auto [w, edge] = parent.at(cur);
        rev.emplace_back(edge, cur);
        cur = w;
    }
    return Steps(rev.rbegin(), rev.rend());
}

const auto kAnyEdge = [](EdgeId) { return true; };
const auto kAnyVertex = [](Vertex) { return true; };

// Rotate: anchor takes the first step's color, each step edge takes its
// successor's color, the last step edge is uncolored and returned. An empty
// sequence leaves the (uncolored) anchor as "the last edge".
EdgeId rotate_and_uncolor(PartialEdgeColoring& col, EdgeId anchor,
                          const Steps& steps) {
    if (steps.empty()) return anchor;
    std::vector<int> old;
    old.reserve(steps.size());
    for (auto& [e, v] : steps) {
        (void)v;
        old.push_back(col.color(e));
    }
    col.assign(anchor, old[0]);
    for (size_t t = 0; t + 1 < steps.size(); ++t)
        col.assign(steps[t].first, old[t + 1]);
    col.unassign(steps.back().first);
    return steps.back().first;
}

// Rename the dense region's color classes (keeping i fixed) so the interior
// matches the boundary again. Interior edges that are uncolored (pending a
// special assignment) or already carry the top color are left untouched.
PartialEdgeColoring merge_dense_region(const Multigraph& g_rem,
                                       const VertexSet& hv, int k, int i,
                                       const PartialEdgeColoring& phiw) {
    Multigraph ambient = g_rem;
    for (EdgeId e : g_rem.induced(hv).edge_ids())
        if (!phiw.is_colored(e) || phiw.color(e) > k) ambient.remove_edge(e);
    Multigraph hview = ambient.induced(hv);
    DenseSubgraph hh;
    hh.vertices = hv;
    hh.k = k;
    hh.edge_count = hview.edge_count();
    hh.boundary = ambient.boundary(hv);
    PartialEdgeColoring psi(ambient, k);
    for (EdgeId e : hview.edge_ids()) psi.assign(e, phiw.color(e));
    return merge_colorings(ambient, hh, psi, phiw, MergeMode::protect_color, i);
}

// Walking the path chain from the end `from_end`: does `first` appear
// strictly before `second`?
bool meets_before(const KempeChain& p, Vertex from_end, Vertex first,
                  Vertex second) {
    std::vector<Vertex> vs = p.vertices;
    if (!vs.empty() && vs.back() == from_end)
        std::reverse(vs.begin(), vs.end());
    if (vs.empty() || vs.front() != from_end)
        throw DefectError("meets_before: not an end of the chain");
    auto idx = [&](Vertex v) {
        auto it = std::find(vs.begin(), vs.end(), v);
        return it == vs.end() ? vs.size() : static_cast<size_t>(it - vs.begin());
    };
    return idx(first) < idx(second);
}

struct OpEnv {
    const Multigraph& g;
    const Precoloring& p;
    const ExtensionTriple& t;
    long long budget;
    int delta, mu, k, kp1;
    ImproperReport rep;
    Multigraph g_rem;
    VertexSet banned_verts;  // endpoints of colliders, specials, M_{k+1}

    OpEnv(const Multigraph& g_, const Precoloring& p_,
          const ExtensionTriple& t_, long long budget_)
        : g(g_),
          p(p_),
          t(t_),
          budget(budget_),
          delta(g_.max_degree()),
          mu(g_.max_multiplicity()),
          k(delta + mu - 1),
          kp1(delta + mu),
          rep(classify_improper(g_, p_, t_)),
          g_rem(remainder(g_, p_, t_.mstar)) {
        EdgeSet hot = rep.e1;
        hot.insert(rep.e2.begin(), rep.e2.end());
        hot.insert(t.special.begin(), t.special.end());
        for (EdgeId f : delta_mu_class(g, p)) hot.insert(f);
        for (EdgeId e : hot) {
            auto [u, v] = g.endpoints(e);
            banned_verts.insert(u);
            banned_verts.insert(v);
        }
    }

    bool banned(Vertex z) const { return banned_verts.count(z) > 0; }

    EdgeId mstar_edge_at(Vertex v) const {
        for (EdgeId e : t.mstar) {
            auto [a, b] = g.endpoints(e);
            if (a == v || b == v) return e;
        }
        return -1;
    }
};

// Shared context of an operation at one T2 endpoint: the collider, the M*
// edge behind it, and its certified dense subgraph.
struct SideCtx {
    EdgeId f;
    Vertex u;
    int i;
    EdgeId collider;  // the i-edge at u touching V(M*)
    Vertex y;         // collider's endpoint on the M* edge
    EdgeId exy;
    Vertex x;
    DenseSubgraph dense;
    Multigraph host;   // g - (M u M* \ {exy})
    Multigraph hplus;  // host induced on the dense vertices: H + exy
    std::optional<EdgeId> boundary_i;  // the unique i-edge of the boundary
    Vertex boundary_i_vertex = -1;     // its endpoint inside H
};

SideCtx make_side_ctx(const OpEnv& env, EdgeId f, Vertex u) {
    const ImproperRecord* rec = env.rep.find(f, u);
    if (!rec || !rec->t2)
        throw CasePreconditionError("edge not T2-improper at this endpoint");

    SideCtx ctx{f,
                u,
                env.p.color_of(f),
                rec->collider,
                -1,
                -1,
                -1,
                {},
                Multigraph(),
                Multigraph(),
                std::nullopt,
                -1};
    ctx.y = env.g_rem.other_end(ctx.collider, u);
    ctx.exy = env.mstar_edge_at(ctx.y);
    if (ctx.exy == -1)
        throw CasePreconditionError("collider does not touch an M* edge");
    ctx.x = env.g.other_end(ctx.exy, ctx.y);

    EdgeSet others = env.t.mstar;
    others.erase(ctx.exy);
    EdgeSet drop = env.p.matching;
    drop.insert(others.begin(), others.end());
    ctx.host = env.g.minus_edges(drop);
    try {
        ctx.dense = critical_dense_subgraph(ctx.host, ctx.exy, env.k,
                                            env.budget);
    } catch (const InputError& ex) {
        throw CasePreconditionError("M* edge lost criticality: " +
                                    std::string(ex.what()));
    }
    ctx.hplus = ctx.host.induced(ctx.dense.vertices);
    if (!ctx.hplus.has_edge(ctx.collider))
        throw CasePreconditionError("collider not inside the dense subgraph");
    if (ctx.hplus.degree(ctx.x) != env.delta ||
        ctx.hplus.degree(ctx.y) != env.delta ||
        ctx.hplus.multiplicity(ctx.x, ctx.y) != env.mu)
        throw CasePreconditionError("M* edge not fully saturated");

    for (EdgeId b : ctx.dense.boundary) {
        if (env.t.phi.color(b) != ctx.i) continue;
        if (ctx.boundary_i)
            throw CasePreconditionError("two boundary edges carry color i");
        ctx.boundary_i = b;
        auto [bu, bv] = env.g.endpoints(b);
        ctx.boundary_i_vertex = ctx.dense.contains(bu) ? bu : bv;
    }
    return ctx;
}

// Common tail of Op-I/II/III: rotate the fan sequence, move M* from exy to
// the freed edge, re-merge the dense region.
ExtensionTriple commit_rotation(const OpEnv& env, const SideCtx& ctx,
                                const Steps& seq, const EdgeSet& extra_special,
                                PartialEdgeColoring phiw) {
    EdgeId freed = rotate_and_uncolor(phiw, ctx.exy, seq);
    EdgeSet mstar2 = env.t.mstar;
    mstar2.erase(ctx.exy);
    mstar2.insert(freed);
    Multigraph g_rem2 = remainder(env.g, env.p, mstar2);
    phiw = merge_dense_region(g_rem2, ctx.dense.vertices, env.k, ctx.i, phiw);
    EdgeSet special2 = env.t.special;
    special2.insert(extra_special.begin(), extra_special.end());
    return ExtensionTriple{mstar2, special2, phiw};
}

ExtensionTriple apply_op1(const OpEnv& env, EdgeId f, Vertex u) {
    SideCtx ctx = make_side_ctx(env, f, u);
    MultiFan fan = build_multifan(ctx.hplus, env.t.phi, ctx.x, ctx.exy);
    auto no_i = [&](EdgeId e) { return env.t.phi.color(e) != ctx.i; };
    for (Vertex z : fan.fan_vertices()) {
        if (z == ctx.x || z == ctx.y) continue;
        if (ctx.hplus.degree(z) != env.delta || env.banned(z)) continue;
        auto seq = fan_bfs(ctx.hplus, env.t.phi, fan, z, no_i, kAnyVertex);
        if (!seq && ctx.boundary_i && ctx.y != ctx.boundary_i_vertex) {
            auto avoid_w = [&](Vertex v) { return v != ctx.boundary_i_vertex; };
            seq = fan_bfs(ctx.hplus, env.t.phi, fan, z, kAnyEdge, avoid_w);
        }
        if (!seq && !ctx.boundary_i)
            seq = fan_bfs(ctx.hplus, env.t.phi, fan, z, kAnyEdge, kAnyVertex);
        if (seq) return commit_rotation(env, ctx, *seq, {}, env.t.phi);
    }
    throw CasePreconditionError(
        "no admissible sequence to an unbanned max-degree fan vertex");
}

ExtensionTriple apply_op2(const OpEnv& env, EdgeId f, Vertex u) {
    SideCtx ctx = make_side_ctx(env, f, u);
    if (!ctx.boundary_i)
        throw CasePreconditionError("no boundary edge carries color i");
    Vertex w = ctx.boundary_i_vertex;
    if (w == ctx.x || w == ctx.y)
        throw CasePreconditionError("boundary-i vertex coincides with V(exy)");
    if (ctx.hplus.degree(w) != env.delta - 1)
        throw CasePreconditionError("boundary-i vertex has the wrong degree");
    if (!env.t.phi.is_missing(ctx.hplus, w, ctx.i))
        throw CasePreconditionError("color i not missing inside H at w");
    if (env.banned(w))
        throw CasePreconditionError("boundary-i vertex touches a collider");
    MultiFan fan = build_multifan(ctx.hplus, env.t.phi, ctx.x, ctx.exy);
    if (!fan.contains_vertex(w))
        throw CasePreconditionError("boundary-i vertex not in the fan");
    auto seq = fan_bfs(ctx.hplus, env.t.phi, fan, w, kAnyEdge, kAnyVertex);
    if (!seq) throw CasePreconditionError("no sequence to the boundary-i vertex");
    return commit_rotation(env, ctx, *seq, {}, env.t.phi);
}

ExtensionTriple apply_op3(const OpEnv& env, EdgeId f, Vertex u) {
    SideCtx ctx = make_side_ctx(env, f, u);
    if (!ctx.boundary_i)
        throw CasePreconditionError("no boundary edge carries color i");
    EdgeId h = *ctx.boundary_i;
    if (!env.rep.e1.count(h))
        throw CasePreconditionError("boundary i-edge is not in E1");
    MultiFan fan = build_multifan(ctx.hplus, env.t.phi, ctx.x, ctx.exy);
    for (Vertex z : fan.fan_vertices()) {
        if (z == ctx.x || z == ctx.y) continue;
        if (ctx.hplus.degree(z) != env.delta || env.banned(z)) continue;
        auto seq = fan_bfs(ctx.hplus, env.t.phi, fan, z, kAnyEdge, kAnyVertex);
        if (!seq) continue;
        PartialEdgeColoring phiw = env.t.phi;
        phiw.assign(h, env.kp1);
        return commit_rotation(env, ctx, *seq, {h}, phiw);
    }
    throw CasePreconditionError("no sequence to an unbanned max-degree vertex");
}

// Context of the Case-3 operations: f is T2 at u while its other endpoint
// carries a T1 collision inside the same dense subgraph.
struct Case3Ctx {
    SideCtx side;      // built around the T2 endpoint u (paper's v)
    Vertex other;      // paper's u
    EdgeId t1_collider = -1;  // e_yu
    Vertex yv = -1;           // paper's y: the T1 collider's inner endpoint
    Vertex a = -1, b = -1;    // e_ab = side.exy with b adjacent to collider
};

Case3Ctx make_case3_ctx(const OpEnv& env, EdgeId f, Vertex u) {
    Case3Ctx c3{make_side_ctx(env, f, u), -1, -1, -1, -1, -1};
    auto [fu, fv] = env.g.endpoints(f);
    c3.other = fu == u ? fv : fu;
    const ImproperRecord* rec = env.rep.find(f, c3.other);
    if (!rec || rec->t2)
        throw CasePreconditionError(
            "other endpoint is not T1-improper (Case 3 shape)");
    c3.t1_collider = rec->collider;
    c3.yv = env.g_rem.other_end(c3.t1_collider, c3.other);
    c3.b = c3.side.y;  // collider at u meets the M* edge here
    c3.a = c3.side.x;
    return c3;
}

ExtensionTriple apply_case31(const OpEnv& env, EdgeId f, Vertex u) {
    Case3Ctx c3 = make_case3_ctx(env, f, u);
    const SideCtx& s = c3.side;
    if (!s.dense.contains(c3.yv) || !s.hplus.has_edge(c3.t1_collider))
        throw CasePreconditionError("T1 collider not inside the dense subgraph");
    MultiFan fan = build_multifan(s.hplus, env.t.phi, c3.b, s.exy);
    auto no_i = [&](EdgeId e) { return env.t.phi.color(e) != s.i; };
    auto seq = fan_bfs(s.hplus, env.t.phi, fan, c3.yv, no_i, kAnyVertex);
    if (!seq)
        throw CasePreconditionError("no i-free sequence from a to y");
    if (seq->empty())
        throw CasePreconditionError("degenerate sequence in Case 3.1");

    PartialEdgeColoring phiw = env.t.phi;
    EdgeId e_by = rotate_and_uncolor(phiw, s.exy, *seq);
    EdgeSet mstar2 = env.t.mstar;
    mstar2.erase(s.exy);
    mstar2.insert(e_by);
    phiw = merge_dense_region(remainder(env.g, env.p, mstar2),
                              s.dense.vertices, env.k, s.i, phiw);
    // Dissolve the 4-cycle b-u-other-y: give e_by the precolored color and
    // push both colliders into the top class.
    EdgeSet mstar3 = mstar2;
    mstar3.erase(e_by);
    phiw.assign(s.collider, env.kp1);
    phiw.assign(c3.t1_collider, env.kp1);
    phiw.assign(e_by, s.i);
    EdgeSet special2 = env.t.special;
    special2.insert(s.collider);
    special2.insert(c3.t1_collider);
    return ExtensionTriple{mstar3, special2, phiw};
}

// The second-fan resolution shared by Case 3.2 (h'' outside E1) and Case
// 3.3.2. `main_end` is w'' resp. y*; `anchor_color` alpha resp. theta;
// `main_seq` the sequence at b from a to main_end.
ExtensionTriple second_fan_resolution(const OpEnv& env, const Case3Ctx& c3,
                                      const Steps& main_seq, Vertex main_end,
                                      int anchor_color,
                                      const EdgeSet& recolor_special) {
    const SideCtx& s = c3.side;
    PartialEdgeColoring phiw = env.t.phi;

    auto e1a = phiw.edge_with_color(s.hplus, c3.a, anchor_color);
    if (!e1a)
        throw CasePreconditionError("no anchor-colored edge at a inside H");
    MultiFan fana = build_multifan(s.hplus, phiw, c3.a, *e1a);
    Vertex b1 = s.hplus.other_end(*e1a, c3.a);

    // Candidate sequence target: main_end itself when the second fan reaches
    // it, otherwise an unbanned max-degree vertex.
    Vertex bt = -1;
    if (fana.contains_vertex(main_end) && !env.banned(main_end)) {
        bt = main_end;
    } else {
        for (Vertex z : fana.fan_vertices()) {
            if (z == c3.a || z == c3.b) continue;
            if (s.hplus.degree(z) != env.delta || env.banned(z)) continue;
            bt = z;
            break;
        }
    }
    if (bt == -1)
        throw CasePreconditionError("second fan has no admissible target");

    // Branch (i) of the interleaving analysis: the second sequence must not
    // revisit the first one.
    VertexSet main_verts{c3.a};
    for (auto& [e, v] : main_seq) {
        (void)e;
        main_verts.insert(v);
    }
    auto vertex_ok = [&](Vertex v) {
        return v == bt || !main_verts.count(v) || v == c3.a;
    };
    auto sp = fan_bfs(s.hplus, phiw, fana, bt, kAnyEdge, vertex_ok);
    if (!sp)
        throw CasePreconditionError(
            "second sequence interleaves the first (unhandled branch)");

    int beta = 0;
    for (int c = 1; c <= env.k; ++c) {
        if (c == s.i) continue;
        if (phiw.is_missing(env.g_rem, c3.b, c)) {
            beta = c;
            break;
        }
    }
    if (beta == 0)
        throw CasePreconditionError("no spare missing color at b");

    KempeChain chain = kempe_chain(s.hplus, phiw, c3.b, beta, anchor_color);
    if (!chain.contains_vertex(main_end))
        throw CasePreconditionError("chains through b and the target differ");

    if (!chain.contains_edge(*e1a)) {
        phiw = kempe_swap_subchain(s.hplus, phiw, chain, c3.b, main_end);
        phiw.unassign(*e1a);
        phiw.assign(s.exy, anchor_color);
    } else if (meets_before(chain, c3.b, b1, c3.a)) {
        phiw = kempe_swap_subchain(s.hplus, phiw, chain, c3.b, b1);
        phiw.unassign(*e1a);
        phiw.assign(s.exy, anchor_color);
    } else {
        phiw.unassign(*e1a);
        phiw = kempe_swap_subchain(s.hplus, phiw, chain, main_end, b1);
        Steps prefix = main_seq;
        EdgeId last_pref = rotate_and_uncolor(phiw, s.exy, prefix);
        phiw.assign(last_pref, beta);
    }

    EdgeId e_t = rotate_and_uncolor(phiw, *e1a, *sp);
    EdgeSet mstar2 = env.t.mstar;
    mstar2.erase(s.exy);
    mstar2.insert(e_t);
    phiw = merge_dense_region(remainder(env.g, env.p, mstar2),
                              s.dense.vertices, env.k, s.i, phiw);
    EdgeSet special2 = env.t.special;
    for (EdgeId e : recolor_special) {
        phiw.assign(e, env.kp1);
        special2.insert(e);
    }
    return ExtensionTriple{mstar2, special2, phiw};
}

ExtensionTriple apply_case32(const OpEnv& env, EdgeId f, Vertex u) {
    Case3Ctx c3 = make_case3_ctx(env, f, u);
    const SideCtx& s = c3.side;
    MultiFan fan = build_multifan(s.hplus, env.t.phi, c3.b, s.exy);

    for (Vertex w : fan.fan_vertices()) {
        if (w == c3.a || w == c3.b || w == u) continue;
        if (s.hplus.degree(w) != env.delta - 1) continue;
        if (!env.t.phi.is_missing(s.hplus, w, s.i)) continue;

        auto hpp = env.t.phi.edge_with_color(env.g_rem, w, s.i);
        auto avoid_u = [&](Vertex v) { return v != u; };
        auto prefix =
            fan_bfs(s.hplus, env.t.phi, fan, w, kAnyEdge, avoid_u);
        if (!prefix) continue;

        if (!hpp || env.rep.e1.count(*hpp)) {
            // First branch: rotate through w and the collider, then park the
            // collider (and h'' if present) in the top class.
            Steps full = *prefix;
            full.emplace_back(s.collider, u);
            PartialEdgeColoring phiw = env.t.phi;
            EdgeId last = rotate_and_uncolor(phiw, s.exy, full);
            if (last != s.collider)
                throw DefectError("rotation did not end at the collider");
            EdgeSet special2 = env.t.special;
            if (hpp) {
                phiw.assign(*hpp, env.kp1);
                special2.insert(*hpp);
            }
            EdgeSet mstar2 = env.t.mstar;
            mstar2.erase(s.exy);
            phiw = merge_dense_region(remainder(env.g, env.p, mstar2),
                                      s.dense.vertices, env.k, s.i, phiw);
            phiw.assign(s.collider, env.kp1);
            special2.insert(s.collider);
            return ExtensionTriple{mstar2, special2, phiw};
        }

        // Second branch: h'' exists but cannot be recolored; free a at the
        // anchor color found missing at w''.
        if (env.rep.e2.count(*hpp)) continue;
        int alpha = 0;
        for (int c = 1; c <= env.k; ++c) {
            if (c == s.i) continue;
            if (env.t.phi.is_missing(env.g_rem, w, c)) {
                alpha = c;
                break;
            }
        }
        if (alpha == 0) continue;
        return second_fan_resolution(env, c3, *prefix, w, alpha, {});
    }
    throw CasePreconditionError("no degree-(max-1) vertex missing i in the fan");
}

ExtensionTriple apply_case33(const OpEnv& env, EdgeId f, Vertex u,
                             bool theta_is_i) {
    Case3Ctx c3 = make_case3_ctx(env, f, u);
    const SideCtx& s = c3.side;
    MultiFan fan = build_multifan(s.hplus, env.t.phi, c3.b, s.exy);
    auto no_i = [&](EdgeId e) { return env.t.phi.color(e) != s.i; };

    for (Vertex ystar : fan.fan_vertices()) {
        if (ystar == c3.a || ystar == c3.b || ystar == c3.yv) continue;
        if (s.hplus.degree(ystar) != env.delta) continue;
        auto sstar = fan_bfs(s.hplus, env.t.phi, fan, ystar, no_i, kAnyVertex);
        if (!sstar || sstar->empty()) continue;

        if (theta_is_i) {
            if (!env.t.phi.is_missing(env.g_rem, ystar, s.i)) continue;
            PartialEdgeColoring phiw = env.t.phi;
            EdgeId e_bystar = rotate_and_uncolor(phiw, s.exy, *sstar);
            EdgeSet mstar2 = env.t.mstar;
            mstar2.erase(s.exy);
            phiw = merge_dense_region(remainder(env.g, env.p, mstar2),
                                      s.dense.vertices, env.k, s.i, phiw);
            phiw.assign(e_bystar, s.i);
            phiw.assign(s.collider, env.kp1);
            EdgeSet special2 = env.t.special;
            special2.insert(s.collider);
            return ExtensionTriple{mstar2, special2, phiw};
        }

        int theta = 0;
        for (int c = 1; c <= env.k; ++c) {
            if (c == s.i) continue;
            if (env.t.phi.is_missing(env.g_rem, ystar, c)) {
                theta = c;
                break;
            }
        }
        if (theta == 0) continue;

        // The boundary i-edge seen from the second fan decides whether it is
        // recolored at the end.
        EdgeSet recolor;
        if (s.boundary_i && env.rep.e1.count(*s.boundary_i))
            recolor.insert(*s.boundary_i);
        return second_fan_resolution(env, c3, *sstar, ystar, theta, recolor);
    }
    throw CasePreconditionError(
        theta_is_i ? "no i-free sequence to a max-degree vertex missing i"
                   : "no i-free sequence to an alternative max-degree vertex");
}

void emit_diff(Trace* trace, const Multigraph& g, const ExtensionTriple& before,
               const ExtensionTriple& after) {
    if (!trace) return;
    TraceEntry removed{"mstar-remove", "", {}, {}, -1, -1};
    TraceEntry added{"mstar-add", "", {}, {}, -1, -1};
    for (EdgeId e : before.mstar)
        if (!after.mstar.count(e)) removed.edges.push_back(e);
    for (EdgeId e : after.mstar)
        if (!before.mstar.count(e)) added.edges.push_back(e);
    if (!removed.edges.empty()) trace->push_back(removed);
    if (!added.edges.empty()) trace->push_back(added);
    TraceEntry assigns{"assign", "", {}, {}, -1, -1};
    for (EdgeId e = 0; e < g.edge_slots(); ++e) {
        if (before.phi.color(e) != after.phi.color(e)) {
            assigns.edges.push_back(e);
            assigns.colors.push_back(after.phi.color(e));
        }
    }
    if (!assigns.edges.empty()) trace->push_back(assigns);
}

void verify_case_postconditions(const Multigraph& g, const Precoloring& p,
                                const ExtensionTriple& before,
                                const ExtensionTriple& after,
                                const std::string& label, long long budget,
                                int expected_drop) {
    ImproperReport rb = classify_improper(g, p, before);
    ImproperReport ra = classify_improper(g, p, after);
    if (static_cast<int>(ra.e2.size()) >
        static_cast<int>(rb.e2.size()) - expected_drop)
        throw DefectError(label + ": |E2| did not drop as required");
    EdgeSet improper = ra.e1;
    improper.insert(ra.e2.begin(), ra.e2.end());
    if (!edges_form_matching(g, improper))
        throw DefectError(label + ": E1 u E2 stopped being a matching");
    std::string why;
    if (triple_status(g, p, after, &why, budget) ==
        TripleStatus::infeasible_precondition)
        throw DefectError(label + ": triple no longer prefeasible: " + why);
}

}  // namespace

ExtensionTriple apply_case_operation(const Multigraph& g, const Precoloring& p,
                                     const ExtensionTriple& t, EdgeId f,
                                     Vertex u, CaseId case_id, Trace* trace,
                                     long long budget) {
    if (!p.matching.count(f))
        throw InputError("edge " + std::to_string(f) +
                         " is not a precolored edge");
    OpEnv env(g, p, t, budget);
    if (trace)
        trace->push_back({"case-begin",
                          case_name(case_id),
                          {f, u},
                          {},
                          static_cast<int>(env.rep.e1.size()),
                          static_cast<int>(env.rep.e2.size())});

    ExtensionTriple out;
    int expected_drop = 1;
    switch (case_id) {
        case CaseId::op1: out = apply_op1(env, f, u); break;
        case CaseId::op2: out = apply_op2(env, f, u); break;
        case CaseId::op3: out = apply_op3(env, f, u); break;
        case CaseId::case2: {
            // Sequential double application: resolve u, then the other
            // endpoint on the updated triple.
            ExtensionTriple mid;
            bool done = false;
            for (CaseId sub : {CaseId::op1, CaseId::op2, CaseId::op3}) {
                Trace tmp;
                try {
                    mid = apply_case_operation(g, p, t, f, u, sub,
                                               trace ? &tmp : nullptr, budget);
                    if (trace)
                        trace->insert(trace->end(), tmp.begin(), tmp.end());
                    done = true;
                    break;
                } catch (const CasePreconditionError&) {
                }
            }
            if (!done)
                throw CasePreconditionError("no first-side operation applies");
            Vertex o = g.other_end(f, u);
            OpEnv env2(g, p, mid, budget);
            const ImproperRecord* rec = env2.rep.find(f, o);
            if (!rec || !rec->t2)
                throw CasePreconditionError(
                    "other endpoint not T2-improper after the first side");
            done = false;
            for (CaseId sub : {CaseId::op1, CaseId::op2, CaseId::op3}) {
                Trace tmp;
                try {
                    out = apply_case_operation(g, p, mid, f, o, sub,
                                               trace ? &tmp : nullptr, budget);
                    if (trace)
                        trace->insert(trace->end(), tmp.begin(), tmp.end());
                    done = true;
                    break;
                } catch (const CasePreconditionError&) {
                }
            }
            if (!done)
                throw CasePreconditionError("no second-side operation applies");
            expected_drop = 2;
            break;
        }
        case CaseId::case31: out = apply_case31(env, f, u); break;
        case CaseId::case32: out = apply_case32(env, f, u); break;
        case CaseId::case331: out = apply_case33(env, f, u, true); break;
        case CaseId::case332: out = apply_case33(env, f, u, false); break;
    }

    verify_case_postconditions(g, p, t, out, case_name(case_id), budget,
                               expected_drop);
    if (case_id != CaseId::case2) emit_diff(trace, g, t, out);
    if (trace) {
        ImproperReport ra = classify_improper(g, p, out);
        trace->push_back({"case-end",
                          case_name(case_id),
                          {f, u},
                          {},
                          static_cast<int>(ra.e1.size()),
                          static_cast<int>(ra.e2.size())});
    }
    return out;
}

// ===========================================================================
// Driver.
// ===========================================================================

namespace {

void emit_marker(Trace& trace, const std::string& op, const std::string& note,
                 int e1 = -1, int e2 = -1) {
    trace.push_back({op, note, {}, {}, e1, e2});
}

void emit_full_assign(Trace& trace, const Multigraph& g,
                      const PartialEdgeColoring& before,
                      const PartialEdgeColoring& after) {
    TraceEntry assigns{"assign", "", {}, {}, -1, -1};
    for (EdgeId e = 0; e < g.edge_slots(); ++e) {
        if (before.color(e) != after.color(e)) {
            assigns.edges.push_back(e);
            assigns.colors.push_back(after.color(e));
        }
    }
    if (!assigns.edges.empty()) trace.push_back(assigns);
}

PartialEdgeColoring oracle_coloring(const Multigraph& g, const Precoloring& p,
                                    long long budget) {
    auto col = brute_force_extension(g, p, palette_of(g), budget);
    if (!col)
        throw DefectError(
            "no extension with the Vizing-Gupta palette exists; the distance-3"
            " extension theorem would be falsified");
    return *col;
}

}  // namespace

ExtendResult extend_precoloring(const Multigraph& g, const Precoloring& p,
                                Strategy strategy, long long budget) {
    validate_precoloring(g, p);
    if (g.max_multiplicity() < 2)
        throw InputError("extension requires maximum multiplicity >= 2");
    const int kp1 = palette_of(g);
    const int k = kp1 - 1;

    Trace trace;
    PartialEdgeColoring empty(g, kp1);

    auto finish = [&](PartialEdgeColoring col, bool fallback) {
        col.widen_palette(kp1);
        auto check = verify_extension(g, p, col);
        if (!check.ok)
            throw DefectError("emitted coloring failed verification: " +
                              check.diagnostics.front());
        return ExtendResult{col, trace, fallback};
    };

    if (strategy == Strategy::oracle_only) {
        emit_marker(trace, "oracle", "");
        PartialEdgeColoring col = oracle_coloring(g, p, budget);
        emit_full_assign(trace, g, empty, col);
        return finish(col, false);
    }

    if (p.matching.empty()) {
        emit_marker(trace, "vizing", "");
        PartialEdgeColoring col = vizing_gupta_color(g);
        col.widen_palette(kp1);
        emit_full_assign(trace, g, empty, col);
        return finish(col, false);
    }

    Multigraph g_minus_m = g.minus_edges(p.matching);
    ChiResult chi_rem = exact_chromatic_index(g_minus_m, budget);

    if (chi_rem.chi <= k) {
        // Opening reduction: recolor the clashes with the top color; the
        // distance-3 property keeps that class a matching.
        emit_marker(trace, "reduction", "");
        PartialEdgeColoring psi = chi_rem.witness;
        psi.widen_palette(kp1);
        for (EdgeId e : g_minus_m.edge_ids()) {
            auto [eu, ev] = g.endpoints(e);
            bool clash = false;
            for (EdgeId fm : p.matching) {
                auto [fu, fv] = g.endpoints(fm);
                bool adjacent =
                    eu == fu || eu == fv || ev == fu || ev == fv;
                if (adjacent && psi.color(e) == p.color_of(fm)) clash = true;
            }
            if (clash) psi.assign(e, kp1);
        }
        for (EdgeId fm : p.matching) psi.assign(fm, p.color_of(fm));
        emit_full_assign(trace, g, empty, psi);
        return finish(psi, false);
    }

    auto fallback = [&](const std::string& why) {
        emit_marker(trace, "fallback", why);
        PartialEdgeColoring before = empty;
        PartialEdgeColoring col = oracle_coloring(g, p, budget);
        emit_full_assign(trace, g, before, col);
        return finish(col, true);
    };

    try {
        auto [sat, phi0] = saturated_matching(g, p.matching, budget);
        phi0.widen_palette(kp1);
        ExtensionTriple t{sat.mstar, {}, phi0};

        {
            ImproperReport rep0 = classify_improper(g, p, t);
            emit_marker(trace, "init", "",
                        static_cast<int>(rep0.e1.size()),
                        static_cast<int>(rep0.e2.size()));
            TraceEntry ms{"mstar-add", "", {}, {}, -1, -1};
            ms.edges.assign(t.mstar.begin(), t.mstar.end());
            trace.push_back(ms);
            emit_full_assign(trace, g, empty, t.phi);
        }

        ImproperReport rep = classify_improper(g, p, t);
        int guard = 2 * static_cast<int>(p.matching.size()) +
                    static_cast<int>(rep.e2.size()) + 4;
        while (rep.any_t2()) {
            if (--guard < 0) return fallback("case loop exceeded its bound");
            const ImproperRecord* pick = nullptr;
            for (const auto& r : rep.records)
                if (r.t2) {
                    pick = &r;
                    break;
                }
            bool applied = false;
            std::string last_reason;
            for (CaseId cid :
                 {CaseId::op1, CaseId::op2, CaseId::op3, CaseId::case31,
                  CaseId::case32, CaseId::case331, CaseId::case332}) {
                Trace tmp;
                try {
                    ExtensionTriple next = apply_case_operation(
                        g, p, t, pick->precolored, pick->endpoint, cid, &tmp,
                        budget);
                    trace.insert(trace.end(), tmp.begin(), tmp.end());
                    t = next;
                    applied = true;
                    break;
                } catch (const CasePreconditionError& ex) {
                    last_reason = ex.what();
                } catch (const DefectError& ex) {
                    return fallback("case operation defect: " +
                                    std::string(ex.what()));
                }
            }
            if (!applied)
                return fallback("no case operation applies: " + last_reason);
            rep = classify_improper(g, p, t);
        }

        // All remaining collisions are T1: push them into the top class.
        if (!rep.e1.empty()) {
            ExtensionTriple before = t;
            for (EdgeId q : rep.e1) {
                t.phi.assign(q, kp1);
                t.special.insert(q);
            }
            emit_marker(trace, "e1-recolor", "");
            emit_diff(&trace, g, before, t);
        }
        std::string why;
        if (triple_status(g, p, t, &why, budget) !=
            TripleStatus::feasible)
            return fallback("final triple not feasible: " + why);

        PartialEdgeColoring before_final = t.phi;
        PartialEdgeColoring col = t.phi;
        for (EdgeId e : t.mstar) col.assign(e, kp1);
        for (EdgeId fm : p.matching) col.assign(fm, p.color_of(fm));
        emit_marker(trace, "finalize", "");
        emit_full_assign(trace, g, before_final, col);
        return finish(col, false);
    } catch (const InputError&) {
        throw;
    } catch (const ResourceError&) {
        throw;
    } catch (const DefectError& ex) {
        return fallback("pipeline defect: " + std::string(ex.what()));
    }
}

}  // namespace mgcolor
