#include "mgcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mgcolor {

PartialEdgeColoring::PartialEdgeColoring(const Multigraph& g, int palette)
    : k_(palette), color_(g.edge_slots(), kUncolored) {
    if (palette < 0) throw InputError("negative palette size");
}

void PartialEdgeColoring::widen_palette(int k) {
    if (k < k_) throw InputError("palette can only widen");
    k_ = k;
}

int PartialEdgeColoring::color(EdgeId e) const {
    if (e < 0 || e >= static_cast<int>(color_.size()))
        throw InputError("edge id " + std::to_string(e) + " out of range");
    return color_[e];
}

void PartialEdgeColoring::assign(EdgeId e, int c) {
    if (c < 1 || c > k_)
        throw InputError("color " + std::to_string(c) + " outside palette 1.." +
                         std::to_string(k_));
    if (e < 0 || e >= static_cast<int>(color_.size()))
        throw InputError("edge id " + std::to_string(e) + " out of range");
    color_[e] = c;
}

void PartialEdgeColoring::unassign(EdgeId e) {
    if (e < 0 || e >= static_cast<int>(color_.size()))
        throw InputError("edge id " + std::to_string(e) + " out of range");
    color_[e] = kUncolored;
}

int PartialEdgeColoring::colored_count(const Multigraph& g) const {
    int count = 0;
    for (EdgeId e : g.edge_ids())
        if (color_[e] != kUncolored) ++count;
    return count;
}

bool PartialEdgeColoring::total_on(const Multigraph& g) const {
    for (EdgeId e : g.edge_ids())
        if (color_[e] == kUncolored) return false;
    return true;
}

std::set<int> PartialEdgeColoring::present(const Multigraph& g,
                                           Vertex v) const {
    std::set<int> out;
    for (EdgeId e : g.incident(v))
        if (color_[e] != kUncolored) out.insert(color_[e]);
    return out;
}

std::set<int> PartialEdgeColoring::missing(const Multigraph& g,
                                           Vertex v) const {
    std::set<int> out;
    auto pres = present(g, v);
    for (int c = 1; c <= k_; ++c)
        if (!pres.count(c)) out.insert(c);
    return out;
}

bool PartialEdgeColoring::is_missing(const Multigraph& g, Vertex v,
                                     int c) const {
    for (EdgeId e : g.incident(v))
        if (color_[e] == c) return false;
    return true;
}

std::optional<EdgeId> PartialEdgeColoring::edge_with_color(const Multigraph& g,
                                                           Vertex v,
                                                           int c) const {
    for (EdgeId e : g.incident(v))
        if (color_[e] == c) return e;
    return std::nullopt;
}

std::vector<std::pair<EdgeId, EdgeId>> PartialEdgeColoring::conflicts(
    const Multigraph& g) const {
    std::set<std::pair<EdgeId, EdgeId>> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i) {
            if (color_[inc[i]] == kUncolored) continue;
            for (size_t j = i + 1; j < inc.size(); ++j) {
                if (color_[inc[i]] == color_[inc[j]])
                    seen.insert({std::min(inc[i], inc[j]),
                                 std::max(inc[i], inc[j])});
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool PartialEdgeColoring::is_proper(const Multigraph& g) const {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i) {
            if (color_[inc[i]] == kUncolored) continue;
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (color_[inc[i]] == color_[inc[j]]) return false;
        }
    }
    return true;
}

PartialEdgeColoring PartialEdgeColoring::restricted_to(
    const Multigraph& h) const {
    PartialEdgeColoring out = *this;
    for (int e = 0; e < static_cast<int>(out.color_.size()); ++e)
        if (!h.has_edge(e)) out.color_[e] = kUncolored;
    return out;
}

VertexSetFlags classify_vertex_set(const Multigraph& g,
                                   const PartialEdgeColoring& c,
                                   const VertexSet& x) {
    VertexSetFlags flags;

    flags.elementary = true;
    std::set<int> seen;
    for (Vertex v : x) {
        for (int m : c.missing(g, v)) {
            if (seen.count(m)) {
                flags.elementary = false;
                break;
            }
            seen.insert(m);
        }
        if (!flags.elementary) break;
    }

    flags.closed = true;
    std::vector<int> boundary_colors;
    for (EdgeId e : g.boundary(x)) {
        int col = c.color(e);
        if (col == kUncolored) {
            flags.closed = false;
            flags.diagnostic =
                "uncolored boundary edge " + std::to_string(e);
            break;
        }
        boundary_colors.push_back(col);
        for (Vertex v : x) {
            if (c.is_missing(g, v, col)) {
                flags.closed = false;
                flags.diagnostic = "boundary color " + std::to_string(col) +
                                   " missing at vertex " + std::to_string(v);
                break;
            }
        }
        if (!flags.closed) break;
    }

    flags.strongly_closed = flags.closed;
    if (flags.closed) {
        std::sort(boundary_colors.begin(), boundary_colors.end());
        if (std::adjacent_find(boundary_colors.begin(),
                               boundary_colors.end()) != boundary_colors.end())
            flags.strongly_closed = false;
    }
    return flags;
}

bool KempeChain::contains_vertex(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool KempeChain::contains_edge(EdgeId e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

namespace {

// The unique alpha- or beta-edge at v other than `avoid`, if any.
std::optional<EdgeId> chain_step(const Multigraph& g,
                                 const PartialEdgeColoring& c, Vertex v,
                                 int alpha, int beta, EdgeId avoid) {
    for (EdgeId e : g.incident(v)) {
        if (e == avoid) continue;
        if (c.color(e) == alpha || c.color(e) == beta) return e;
    }
    return std::nullopt;
}

void reverse_path(KempeChain& ch) {
    std::reverse(ch.vertices.begin(), ch.vertices.end());
    std::reverse(ch.edges.begin(), ch.edges.end());
}

void canonicalize(KempeChain& ch) {
    if (ch.shape == KempeChain::Shape::path) {
        if (ch.vertices.front() > ch.vertices.back()) reverse_path(ch);
        return;
    }
    // Cycle: rotate to start at the least vertex, direction of smaller first
    // edge id.
    int m = static_cast<int>(ch.vertices.size());
    int pos = static_cast<int>(
        std::min_element(ch.vertices.begin(), ch.vertices.end()) -
        ch.vertices.begin());
    std::vector<Vertex> vs(m);
    std::vector<EdgeId> fwd(m), bwd(m);
    for (int i = 0; i < m; ++i) {
        vs[i] = ch.vertices[(pos + i) % m];
        fwd[i] = ch.edges[(pos + i) % m];
        // Walking backwards, the edge leaving vs[i] is the one that entered it.
        bwd[i] = ch.edges[(pos - 1 - i + 2 * m) % m];
    }
    std::vector<Vertex> vs_b(m);
    vs_b[0] = vs[0];
    for (int i = 1; i < m; ++i) vs_b[i] = vs[m - i];
    if (bwd < fwd) {
        ch.vertices = vs_b;
        ch.edges = bwd;
    } else {
        ch.vertices = vs;
        ch.edges = fwd;
    }
}

}  // namespace

KempeChain kempe_chain(const Multigraph& g, const PartialEdgeColoring& c,
                       Vertex v, int alpha, int beta) {
    if (alpha == beta) throw InputError("kempe chain needs distinct colors");
    if (v < 0 || v >= g.vertex_count())
        throw InputError("unknown vertex " + std::to_string(v));

    KempeChain ch;
    ch.alpha = alpha;
    ch.beta = beta;
    ch.vertices = {v};
    ch.edges = {};
    ch.shape = KempeChain::Shape::path;

    // Extend forward from v, then (if not a cycle) backward.
    Vertex cur = v;
    EdgeId last = -1;
    while (true) {
        auto next = chain_step(g, c, cur, alpha, beta, last);
        if (!next) break;
        Vertex w = g.other_end(*next, cur);
        ch.edges.push_back(*next);
        if (w == v) {
            ch.shape = KempeChain::Shape::cycle;
            break;
        }
        ch.vertices.push_back(w);
        cur = w;
        last = *next;
    }
    if (ch.shape == KempeChain::Shape::path) {
        cur = v;
        last = ch.edges.empty() ? -1 : ch.edges.front();
        while (true) {
            auto next = chain_step(g, c, cur, alpha, beta, last);
            if (!next) break;
            Vertex w = g.other_end(*next, cur);
            ch.vertices.insert(ch.vertices.begin(), w);
            ch.edges.insert(ch.edges.begin(), *next);
            cur = w;
            last = *next;
        }
    }
    canonicalize(ch);
    return ch;
}

PartialEdgeColoring kempe_swap_subchain(const Multigraph& g,
                                        const PartialEdgeColoring& c,
                                        const KempeChain& ch, Vertex a,
                                        Vertex b) {
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
        throw InputError("subchain endpoint is not a vertex");
    if (!ch.contains_vertex(a) || !ch.contains_vertex(b))
        throw InputError("subchain endpoints must lie on the chain");
    PartialEdgeColoring out = c;
    auto flip = [&](EdgeId e) {
        int col = out.color(e);
        if (col == ch.alpha)
            out.assign(e, ch.beta);
        else if (col == ch.beta)
            out.assign(e, ch.alpha);
        else
            throw DefectError("chain edge not colored alpha/beta");
    };
    if (ch.shape == KempeChain::Shape::cycle) {
        for (EdgeId e : ch.edges) flip(e);
        return out;
    }
    auto pa = std::find(ch.vertices.begin(), ch.vertices.end(), a) -
              ch.vertices.begin();
    auto pb = std::find(ch.vertices.begin(), ch.vertices.end(), b) -
              ch.vertices.begin();
    if (pa > pb) std::swap(pa, pb);
    for (auto i = pa; i < pb; ++i) flip(ch.edges[i]);
    return out;
}

namespace {

// Lexicographically least permutation pi of 1..k with pi(old) in allowed[old],
// by committing the smallest value that keeps the rest perfectly matchable.
bool kuhn_augment(int o, const std::vector<std::vector<int>>& allowed,
                  std::vector<int>& match_new, std::vector<char>& used) {
    for (int c : allowed[o]) {
        if (used[c]) continue;
        used[c] = 1;
        if (match_new[c] == -1 ||
            kuhn_augment(match_new[c], allowed, match_new, used)) {
            match_new[c] = o;
            return true;
        }
    }
    return false;
}

bool perfect_matching_exists(int k, const std::vector<std::vector<int>>& allowed) {
    std::vector<int> match_new(k + 1, -1);
    for (int o = 1; o <= k; ++o) {
        std::vector<char> used(k + 1, 0);
        if (!kuhn_augment(o, allowed, match_new, used)) return false;
    }
    return true;
}

}  // namespace

PartialEdgeColoring merge_colorings(const Multigraph& g, const DenseSubgraph& h,
                                    const PartialEdgeColoring& psi,
                                    const PartialEdgeColoring& phi,
                                    MergeMode mode, int protected_color) {
    const int k = psi.palette();
    if (mode == MergeMode::plain && k < g.max_degree())
        throw InputError("plain merge needs k >= max degree");
    if (mode == MergeMode::protect_color) {
        if (k < g.max_degree() + 1)
            throw InputError("protected merge needs k >= max degree + 1");
        if (protected_color < 1 || protected_color > k)
            throw InputError("protected color outside palette");
    }
    const int prot =
        mode == MergeMode::protect_color ? protected_color : kUncolored;

    Multigraph hview = g.induced(h.vertices);
    for (EdgeId e : hview.edge_ids())
        if (!psi.is_colored(e))
            throw InputError("psi leaves edge " + std::to_string(e) +
                             " of the dense subgraph uncolored");

    // Missing sets of psi inside h.
    std::map<Vertex, std::set<int>> missing_psi;
    for (Vertex v : h.vertices) missing_psi[v] = psi.missing(hview, v);

    // Boundary constraints: the preimage of a boundary color must be missing
    // (under psi) at the inside endpoint. Colors above k cannot clash with
    // psi's classes and impose nothing.
    std::map<int, Vertex> inside_endpoint;  // boundary color -> inside vertex
    for (EdgeId e : g.boundary(h.vertices)) {
        int col = phi.color(e);
        if (col == kUncolored)
            throw InputError("uncolored boundary edge " + std::to_string(e));
        if (col > k) continue;
        auto [u, v] = g.endpoints(e);
        Vertex inside = h.contains(u) ? u : v;
        if (inside_endpoint.count(col))
            throw InputError("boundary colors not pairwise distinct: color " +
                             std::to_string(col));
        if (col == prot) continue;  // i-edges stay put; the one allowed clash
        inside_endpoint[col] = inside;
    }

    // Capacity check per inside vertex, reported against the failing vertex.
    std::map<Vertex, int> demand;
    for (auto& [col, v] : inside_endpoint) ++demand[v];
    for (auto& [v, need] : demand) {
        int cap = static_cast<int>(missing_psi[v].size()) -
                  (prot != kUncolored && missing_psi[v].count(prot) ? 1 : 0);
        if (need > cap)
            throw StructuralError(
                "missing-set capacity exceeded at vertex " + std::to_string(v),
                v);
    }

    // allowed[old] = new colors this class may take.
    std::vector<std::vector<int>> allowed(k + 1);
    for (int o = 1; o <= k; ++o) {
        if (o == prot) {
            allowed[o] = {o};
            continue;
        }
        for (int c = 1; c <= k; ++c) {
            if (c == prot) continue;
            auto it = inside_endpoint.find(c);
            if (it == inside_endpoint.end()) {
                allowed[o].push_back(c);  // unconstrained color
            } else if (missing_psi[it->second].count(o)) {
                allowed[o].push_back(c);
            }
        }
    }

    if (!perfect_matching_exists(k, allowed)) {
        Vertex v = demand.empty() ? -1 : demand.begin()->first;
        throw StructuralError("no feasible renaming of color classes", v);
    }

    // Lexicographically least pi.
    std::vector<int> pi(k + 1, 0);
    std::vector<char> taken(k + 1, 0);
    for (int o = 1; o <= k; ++o) {
        std::vector<int> options = allowed[o];
        for (int c : options) {
            if (taken[c]) continue;
            // Tentatively fix pi(o) = c and test the rest.
            std::vector<std::vector<int>> rest(k + 1);
            bool ok = true;
            for (int o2 = o + 1; o2 <= k && ok; ++o2) {
                for (int c2 : allowed[o2])
                    if (!taken[c2] && c2 != c) rest[o2].push_back(c2);
                if (rest[o2].empty()) ok = false;
            }
            if (ok) {
                std::vector<int> match_new(k + 1, -1);
                for (int o2 = o + 1; o2 <= k && ok; ++o2) {
                    std::vector<char> used(k + 1, 0);
                    if (!kuhn_augment(o2, rest, match_new, used)) ok = false;
                }
            }
            if (ok) {
                pi[o] = c;
                taken[c] = 1;
                break;
            }
        }
        if (pi[o] == 0)
            throw DefectError("renaming search lost feasibility");
    }

    PartialEdgeColoring out = phi;
    if (out.palette() < k) out.widen_palette(k);
    for (EdgeId e : hview.edge_ids()) out.assign(e, pi[psi.color(e)]);
    return out;
}

}  // namespace mgcolor
