#include "mgcolor/fans.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace mgcolor {

std::vector<Vertex> MultiFan::fan_vertices() const {
    std::vector<Vertex> out{anchor_target};
    for (auto& [e, y] : entries) {
        (void)e;
        if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
}

bool MultiFan::contains_vertex(Vertex v) const {
    if (v == anchor_target) return true;
    for (auto& [e, y] : entries) {
        (void)e;
        if (y == v) return true;
    }
    return false;
}

int MultiFan::fan_multiplicity(Vertex y) const {
    int count = anchor_target == y ? 1 : 0;
    for (auto& [e, w] : entries) {
        (void)e;
        if (w == y) ++count;
    }
    return count;
}

MultiFan build_multifan(const Multigraph& g, const PartialEdgeColoring& c,
                        Vertex x, EdgeId e, std::optional<int> forbidden) {
    auto [u, v] = g.endpoints(e);
    if (!g.has_edge(e)) throw InputError("anchor edge not in graph");
    if (x != u && x != v)
        throw InputError("anchor edge not incident to the fan center");

    MultiFan fan;
    fan.center = x;
    fan.anchor = e;
    fan.anchor_target = g.other_end(e, x);
    fan.forbidden = forbidden;

    // Missing sets are fixed during growth; cache them per fan vertex.
    std::map<Vertex, std::set<int>> missing;
    auto missing_of = [&](Vertex y) -> const std::set<int>& {
        auto it = missing.find(y);
        if (it == missing.end())
            it = missing.emplace(y, c.missing(g, y)).first;
        return it->second;
    };

    std::set<EdgeId> used{e};
    while (true) {
        EdgeId next = -1;
        for (EdgeId f : g.incident(x)) {
            if (used.count(f)) continue;
            int col = c.color(f);
            if (col == kUncolored) continue;
            if (forbidden && col == *forbidden) continue;
            bool eligible = missing_of(fan.anchor_target).count(col) > 0;
            for (auto& [fe, fy] : fan.entries) {
                (void)fe;
                if (eligible) break;
                eligible = missing_of(fy).count(col) > 0;
            }
            if (eligible && (next == -1 || f < next)) next = f;
        }
        if (next == -1) break;
        used.insert(next);
        fan.entries.emplace_back(next, g.other_end(next, x));
    }
    return fan;
}

LinearSequence linear_sequence_to(const Multigraph& g,
                                  const PartialEdgeColoring& c,
                                  const MultiFan& f, Vertex target) {
    if (target == f.center || !f.contains_vertex(target))
        throw InputError("target vertex " + std::to_string(target) +
                         " is not a fan vertex");

    LinearSequence seq;
    seq.center = f.center;
    seq.start = f.anchor_target;
    if (target == f.anchor_target) return seq;

    // BFS over fan entries: w -> z via a fan edge into z whose color is
    // missing at w. Smallest edge id explored first for determinism.
    std::vector<std::pair<EdgeId, Vertex>> entries = f.entries;
    std::sort(entries.begin(), entries.end());
    std::map<Vertex, std::pair<Vertex, EdgeId>> parent;  // z -> (w, edge)
    std::deque<Vertex> queue{f.anchor_target};
    std::set<Vertex> visited{f.anchor_target};
    while (!queue.empty() && !visited.count(target)) {
        Vertex w = queue.front();
        queue.pop_front();
        auto missing_w = c.missing(g, w);
        for (auto& [edge, z] : entries) {
            if (visited.count(z)) continue;
            if (!missing_w.count(c.color(edge))) continue;
            visited.insert(z);
            parent[z] = {w, edge};
            queue.push_back(z);
        }
    }
    if (!visited.count(target))
        throw InputError("no linear sequence from y0 to target " +
                         std::to_string(target));

    std::vector<std::pair<EdgeId, Vertex>> rev;
    Vertex cur = target;
    while (cur != f.anchor_target) {
        auto [w, edge] = parent.at(cur);
        rev.emplace_back(edge, cur);
        cur = w;
    }
    seq.steps.assign(rev.rbegin(), rev.rend());
    return seq;
}

PartialEdgeColoring shift(const Multigraph& g, const PartialEdgeColoring& c,
                          const LinearSequence& s, int from, int to) {
    (void)g;
    if (from < 1 || from >= to || to > s.length())
        throw InputError("shift indices out of range");
    PartialEdgeColoring out = c;
    std::vector<int> old(s.length() + 1);
    for (int t = from; t <= to; ++t) old[t] = c.color(s.steps[t - 1].first);
    for (int t = from; t <= to - 1; ++t)
        out.assign(s.steps[t - 1].first, old[t + 1]);
    return out;
}

}  // namespace mgcolor
