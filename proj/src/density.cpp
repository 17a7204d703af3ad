#include "mgcolor/density.hpp"

#include <algorithm>
#include <string>

#include "mgcolor/base_color.hpp"

namespace mgcolor {

bool DenseSubgraph::disjoint_from(const DenseSubgraph& o) const {
    for (Vertex v : vertices)
        if (o.vertices.count(v)) return false;
    return true;
}

namespace {

constexpr int kMaxEnumerableVertices = 24;

std::vector<int> degrees_of(const Multigraph& g) {
    std::vector<int> deg(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    return deg;
}

int induced_edge_count(const Multigraph& g, unsigned mask) {
    int count = 0;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        if ((mask >> u & 1u) && (mask >> v & 1u)) ++count;
    }
    return count;
}

VertexSet mask_to_set(unsigned mask, int n) {
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) out.insert(v);
    return out;
}

// All odd vertex subsets X, 3 <= |X| <= cap, with |E(G[X])| = (|X|-1)k/2.
std::vector<unsigned> k_dense_masks(const Multigraph& g, int k, int cap) {
    const int n = g.vertex_count();
    if (n > kMaxEnumerableVertices)
        throw ResourceError("k-dense enumeration beyond desk scale");
    auto deg = degrees_of(g);
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 3 || size > cap || size % 2 == 0) continue;
        long long degsum = 0;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1u) degsum += deg[v];
        long long wanted = static_cast<long long>(size - 1) * k / 2;
        if (degsum < 2 * wanted) continue;  // too sparse to be k-dense
        if (induced_edge_count(g, mask) == wanted) out.push_back(mask);
    }
    return out;
}

DenseSubgraph make_dense(const Multigraph& host, unsigned mask, int k) {
    DenseSubgraph d;
    d.vertices = mask_to_set(mask, host.vertex_count());
    d.k = k;
    d.edge_count = induced_edge_count(host, mask);
    d.boundary = host.boundary(d.vertices);
    return d;
}

}  // namespace

Rational gamma(const Multigraph& g, int max_subset) {
    if (max_subset < 3) throw InputError("gamma subset bound must be >= 3");
    const int n = g.vertex_count();
    if (n < 3) return Rational(0, 1);
    if (n > kMaxEnumerableVertices)
        throw ResourceError("gamma enumeration beyond desk scale");
    Rational best(0, 1);
    int cap = std::min(max_subset, n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 3 || size > cap || size % 2 == 0) continue;
        Rational cand(2LL * induced_edge_count(g, mask), size - 1);
        if (best < cand) best = cand;
    }
    return best;
}

bool is_k_critical_edge(const Multigraph& g, EdgeId e, int k,
                        long long budget) {
    if (!g.has_edge(e)) throw InputError("unknown edge id");
    if (k < 1) throw InputError("k must be positive");
    if (exact_chromatic_index(g, budget).chi != k + 1) return false;
    return exact_chromatic_index(g.minus_edge(e), budget).chi == k;
}

DenseSubgraph critical_dense_subgraph(const Multigraph& g, EdgeId e, int k,
                                      long long budget) {
    if (!g.has_edge(e)) throw InputError("unknown edge id");
    if (k < g.max_degree() + 1)
        throw InputError("critical dense subgraph needs k >= max degree + 1");
    if (!is_k_critical_edge(g, e, k, budget))
        throw InputError("edge " + std::to_string(e) + " is not " +
                         std::to_string(k) + "-critical");

    Multigraph ge = g.minus_edge(e);
    auto masks = k_dense_masks(ge, k, ge.vertex_count());
    auto [eu, ev] = g.endpoints(e);
    unsigned need = (1u << eu) | (1u << ev);

    // Maximal among all k-dense sets, then the one containing V(e). The
    // structure lemmas make it unique; anything else is a defect.
    std::vector<unsigned> maximal;
    for (unsigned m : masks) {
        bool strictly_inside = false;
        for (unsigned o : masks)
            if (o != m && (m & o) == m) {
                strictly_inside = true;
                break;
            }
        if (!strictly_inside) maximal.push_back(m);
    }
    std::vector<unsigned> hits;
    for (unsigned m : maximal)
        if ((m & need) == need) hits.push_back(m);
    if (hits.empty())
        throw DefectError("no k-dense subgraph over the critical edge");
    if (hits.size() > 1)
        throw DefectError("maximal k-dense subgraph not unique");

    DenseSubgraph h = make_dense(ge, hits[0], k);

    // e must stay k-critical inside H+e.
    Multigraph hplus = g.induced(h.vertices);
    if (exact_chromatic_index(hplus, budget).chi != k + 1 ||
        exact_chromatic_index(hplus.minus_edge(e), budget).chi != k)
        throw DefectError("critical edge not critical in its dense subgraph");

    if (exact_chromatic_index(g, budget).chi ==
        g.max_degree() + g.max_multiplicity()) {
        if (hplus.max_degree() != g.max_degree() ||
            hplus.max_multiplicity() != g.max_multiplicity())
            throw DefectError("dense subgraph degree/multiplicity mismatch");
        if (ge.diameter(h.vertices) > 2 || g.diameter(h.vertices) > 2)
            throw DefectError("dense subgraph diameter exceeds 2");
    }
    return h;
}

std::vector<DenseSubgraph> maximal_k_dense_subgraphs(const Multigraph& g,
                                                     int k, long long budget) {
    if (k < 1) throw InputError("k must be positive");
    if (k < g.max_degree() + 1) return {};
    if (exact_chromatic_index(g, budget).chi != k) return {};

    auto masks = k_dense_masks(g, k, g.vertex_count());
    std::vector<unsigned> maximal;
    for (unsigned m : masks) {
        bool strictly_inside = false;
        for (unsigned o : masks)
            if (o != m && (m & o) == m) {
                strictly_inside = true;
                break;
            }
        if (!strictly_inside) maximal.push_back(m);
    }
    std::vector<DenseSubgraph> out;
    for (unsigned m : maximal) out.push_back(make_dense(g, m, k));
    std::sort(out.begin(), out.end(),
              [](const DenseSubgraph& a, const DenseSubgraph& b) {
                  return *a.vertices.begin() < *b.vertices.begin();
              });
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!out[i].disjoint_from(out[j]))
                throw DefectError("maximal k-dense subgraphs overlap");
    return out;
}

}  // namespace mgcolor
