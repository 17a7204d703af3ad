#include "mgcolor/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace mgcolor {

Multigraph::Multigraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    adj_.resize(n_);
}

void Multigraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InputError("unknown vertex " + std::to_string(v));
}

void Multigraph::check_edge(EdgeId e) const {
    if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, true});
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    ++alive_;
    return id;
}

void Multigraph::remove_edge(EdgeId e) {
    check_edge(e);
    edges_[e].alive = false;
    --alive_;
    for (Vertex w : {edges_[e].u, edges_[e].v}) {
        auto& lst = adj_[w];
        lst.erase(std::find(lst.begin(), lst.end(), e));
    }
}

void Multigraph::restore_edge(EdgeId e) {
    if (e < 0 || e >= edge_slots() || edges_[e].alive)
        throw InputError("cannot restore edge " + std::to_string(e));
    edges_[e].alive = true;
    ++alive_;
    for (Vertex w : {edges_[e].u, edges_[e].v}) {
        auto& lst = adj_[w];
        lst.insert(std::upper_bound(lst.begin(), lst.end(), e), e);
    }
}

std::pair<Vertex, Vertex> Multigraph::endpoints(EdgeId e) const {
    if (e < 0 || e >= edge_slots())
        throw InputError("unknown edge id " + std::to_string(e));
    return {edges_[e].u, edges_[e].v};
}

Vertex Multigraph::other_end(EdgeId e, Vertex v) const {
    auto [a, b] = endpoints(e);
    if (v == a) return b;
    if (v == b) return a;
    throw InputError("vertex " + std::to_string(v) + " not on edge " +
                     std::to_string(e));
}

const std::vector<EdgeId>& Multigraph::incident(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<EdgeId> Multigraph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(alive_);
    for (EdgeId e = 0; e < edge_slots(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

int Multigraph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Multigraph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    int count = 0;
    for (EdgeId e : adj_[u])
        if (other_end(e, u) == v) ++count;
    return count;
}

int Multigraph::max_multiplicity() const {
    int mu = 0;
    for (EdgeId e = 0; e < edge_slots(); ++e)
        if (edges_[e].alive)
            mu = std::max(mu, multiplicity(edges_[e].u, edges_[e].v));
    return mu;
}

std::vector<EdgeId> Multigraph::edges_between(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    std::vector<EdgeId> out;
    for (EdgeId e : adj_[u])
        if (other_end(e, u) == v) out.push_back(e);
    return out;
}

Multigraph Multigraph::minus_edge(EdgeId e) const {
    Multigraph g = *this;
    g.remove_edge(e);
    return g;
}

Multigraph Multigraph::minus_edges(const EdgeSet& drop) const {
    Multigraph g = *this;
    for (EdgeId e : drop) g.remove_edge(e);
    return g;
}

Multigraph Multigraph::minus_vertices(const VertexSet& drop) const {
    for (Vertex v : drop) check_vertex(v);
    Multigraph g = *this;
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!g.edges_[e].alive) continue;
        if (drop.count(g.edges_[e].u) || drop.count(g.edges_[e].v))
            g.remove_edge(e);
    }
    return g;
}

Multigraph Multigraph::induced(const VertexSet& keep) const {
    for (Vertex v : keep) check_vertex(v);
    Multigraph g = *this;
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!g.edges_[e].alive) continue;
        if (!keep.count(g.edges_[e].u) || !keep.count(g.edges_[e].v))
            g.remove_edge(e);
    }
    return g;
}

std::vector<int> Multigraph::vertex_distances(Vertex s) const {
    check_vertex(s);
    std::vector<int> dist(n_, kInfinity);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (EdgeId e : adj_[v]) {
            Vertex w = other_end(e, v);
            if (dist[w] == kInfinity) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int Multigraph::vertex_distance(Vertex s, Vertex t) const {
    check_vertex(t);
    return vertex_distances(s)[t];
}

int Multigraph::edge_distance(EdgeId e, EdgeId f) const {
    check_edge(e);
    check_edge(f);
    if (e == f) throw InputError("edge_distance requires distinct edges");
    auto [eu, ev] = endpoints(e);
    auto [fu, fv] = endpoints(f);
    int best = kInfinity;
    for (Vertex a : {eu, ev}) {
        auto dist = vertex_distances(a);
        for (Vertex b : {fu, fv}) best = std::min(best, dist[b]);
    }
    return best;
}

bool Multigraph::is_distance_matching(const EdgeSet& m, int t) const {
    if (t <= 0) throw InputError("distance parameter must be positive");
    for (EdgeId e : m) check_edge(e);
    for (auto it = m.begin(); it != m.end(); ++it) {
        for (auto jt = std::next(it); jt != m.end(); ++jt) {
            int d = edge_distance(*it, *jt);
            if (d != kInfinity && d < t) return false;
        }
    }
    return true;
}

EdgeSet Multigraph::boundary(const VertexSet& x) const {
    for (Vertex v : x) check_vertex(v);
    EdgeSet out;
    for (EdgeId e = 0; e < edge_slots(); ++e) {
        if (!edges_[e].alive) continue;
        int inside = static_cast<int>(x.count(edges_[e].u)) +
                     static_cast<int>(x.count(edges_[e].v));
        if (inside == 1) out.insert(e);
    }
    return out;
}

int Multigraph::diameter(const VertexSet& x) const {
    if (x.empty()) throw InputError("diameter of empty vertex set");
    Multigraph sub = induced(x);
    int diam = 0;
    for (Vertex s : x) {
        auto dist = sub.vertex_distances(s);
        for (Vertex t : x) {
            if (dist[t] == kInfinity) return kInfinity;
            diam = std::max(diam, dist[t]);
        }
    }
    return diam;
}

bool Multigraph::operator==(const Multigraph& o) const {
    if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].alive != o.edges_[i].alive) return false;
        if (edges_[i].alive &&
            (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v))
            return false;
    }
    return true;
}

}  // namespace mgcolor
