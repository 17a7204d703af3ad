#include "mgcolor/io.hpp"

#include <sstream>

#include "json.hpp"

namespace mgcolor {

namespace {

std::vector<std::pair<int, std::string>> content_lines(
    const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        out.emplace_back(number, line);
    }
    return out;
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty graph file", 1);

    auto [header_no, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    int n = -1;
    if (!(hs >> tag >> n) || tag != "mgraph" || n < 0)
        throw ParseError("expected header 'mgraph <n>'", header_no);

    Multigraph g(n);
    for (size_t idx = 1; idx < lines.size(); ++idx) {
        auto [no, line] = lines[idx];
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind != "e") throw ParseError("expected edge line 'e <u> <v> [mult]'", no);
        int u = -1, v = -1, mult = 1;
        if (!(ls >> u >> v)) throw ParseError("malformed edge line", no);
        if (!ls.eof()) {
            if (!(ls >> mult) || mult < 1)
                throw ParseError("bad multiplicity", no);
        }
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens on edge line", no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex label outside 0.." + std::to_string(n - 1),
                             no);
        if (u == v) throw ParseError("loop edge not allowed", no);
        for (int c = 0; c < mult; ++c) g.add_edge(u, v);
    }
    return g;
}

std::string serialize_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "mgraph " << g.vertex_count() << "\n";
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        out << "e " << u << " " << v << "\n";
    }
    return out.str();
}

Precoloring parse_precoloring(const std::string& text, const Multigraph& g) {
    Precoloring p;
    for (auto& [no, line] : content_lines(text)) {
        std::istringstream ls(line);
        std::string kind;
        int e = -1, c = -1;
        if (!(ls >> kind >> e >> c) || kind != "p")
            throw ParseError("expected 'p <edge-id> <color>'", no);
        if (!g.has_edge(e)) throw ParseError("unknown edge id", no);
        if (p.matching.count(e)) throw ParseError("duplicate edge", no);
        p.matching.insert(e);
        p.colors[e] = c;
    }
    validate_precoloring(g, p);
    return p;
}

std::string serialize_precoloring(const Precoloring& p) {
    std::ostringstream out;
    for (EdgeId e : p.matching)
        out << "p " << e << " " << p.color_of(e) << "\n";
    return out.str();
}

PartialEdgeColoring parse_coloring(const std::string& text,
                                   const Multigraph& g) {
    int palette = g.max_degree() + g.max_multiplicity();
    std::vector<std::pair<EdgeId, int>> entries;
    for (auto& [no, line] : content_lines(text)) {
        std::istringstream ls(line);
        std::string kind;
        int e = -1, c = -1;
        if (!(ls >> kind >> e >> c) || kind != "c")
            throw ParseError("expected 'c <edge-id> <color>'", no);
        if (!g.has_edge(e)) throw ParseError("unknown edge id", no);
        if (c < 1) throw ParseError("colors are positive", no);
        palette = std::max(palette, c);
        entries.emplace_back(e, c);
    }
    PartialEdgeColoring col(g, palette);
    for (auto& [e, c] : entries) col.assign(e, c);
    return col;
}

std::string serialize_coloring(const Multigraph& g,
                               const PartialEdgeColoring& c) {
    std::ostringstream out;
    for (EdgeId e : g.edge_ids())
        if (c.is_colored(e)) out << "c " << e << " " << c.color(e) << "\n";
    return out.str();
}

std::string trace_to_json(const Trace& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TraceEntry& entry : t) {
        nlohmann::ordered_json obj;
        obj["op"] = entry.op;
        obj["case"] = entry.case_id;
        obj["edges"] = entry.edges;
        obj["colors"] = entry.colors;
        obj["e1_size"] = entry.e1_size;
        obj["e2_size"] = entry.e2_size;
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

Trace trace_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("bad trace json: ") + ex.what(), 1);
    }
    if (!arr.is_array()) throw ParseError("trace json must be an array", 1);
    Trace out;
    for (const auto& obj : arr) {
        TraceEntry e;
        e.op = obj.value("op", "");
        e.case_id = obj.value("case", "");
        e.edges = obj.value("edges", std::vector<int>{});
        e.colors = obj.value("colors", std::vector<int>{});
        e.e1_size = obj.value("e1_size", -1);
        e.e2_size = obj.value("e2_size", -1);
        out.push_back(e);
    }
    return out;
}

PartialEdgeColoring replay_trace(const Multigraph& g, const Trace& t) {
    int palette = g.max_degree() + g.max_multiplicity();
    for (const TraceEntry& entry : t)
        for (int c : entry.colors) palette = std::max(palette, c);
    PartialEdgeColoring col(g, palette);
    for (const TraceEntry& entry : t) {
        if (entry.op != "assign") continue;
        if (entry.edges.size() != entry.colors.size())
            throw InputError("assign entry with mismatched arrays");
        for (size_t i = 0; i < entry.edges.size(); ++i) {
            if (entry.colors[i] == kUncolored)
                col.unassign(entry.edges[i]);
            else
                col.assign(entry.edges[i], entry.colors[i]);
        }
    }
    return col;
}

}  // namespace mgcolor
