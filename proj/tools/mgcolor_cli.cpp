#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mgcolor/base_color.hpp"
#include "mgcolor/density.hpp"
#include "mgcolor/extend.hpp"
#include "mgcolor/io.hpp"
#include "mgcolor/oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mgcolor::InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw mgcolor::InputError("cannot write file: " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph edge-coloring engine"};
    app.require_subcommand(1);

    std::string graph_path, precoloring_path, coloring_path, trace_path;
    std::string output_path, strategy = "paper-first";
    int dense_k = 0;

    auto* cmd_color = app.add_subcommand("color", "constructive coloring");
    cmd_color->add_option("graph", graph_path)->required();

    auto* cmd_chi = app.add_subcommand("chi", "exact chromatic index");
    cmd_chi->add_option("graph", graph_path)->required();

    auto* cmd_gamma = app.add_subcommand("gamma", "exact density");
    cmd_gamma->add_option("graph", graph_path)->required();

    auto* cmd_dense = app.add_subcommand("dense", "maximal k-dense subgraphs");
    cmd_dense->add_option("graph", graph_path)->required();
    cmd_dense->add_option("--k", dense_k, "density parameter")->required();

    auto* cmd_extend = app.add_subcommand("extend", "extend a precoloring");
    cmd_extend->add_option("graph", graph_path)->required();
    cmd_extend->add_option("precoloring", precoloring_path)->required();
    cmd_extend->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"paper-first", "oracle-only"}));
    cmd_extend->add_option("--trace", trace_path, "write the json trace here");
    cmd_extend->add_option("--output", output_path, "coloring output file");

    auto* cmd_verify = app.add_subcommand("verify", "check an extension");
    cmd_verify->add_option("graph", graph_path)->required();
    cmd_verify->add_option("precoloring", precoloring_path)->required();
    cmd_verify->add_option("coloring", coloring_path)->required();

    auto* cmd_trace = app.add_subcommand("trace", "replay a json trace");
    cmd_trace->add_option("graph", graph_path)->required();
    cmd_trace->add_option("tracefile", trace_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_color->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            auto col = mgcolor::vizing_gupta_color(g);
            std::cout << mgcolor::serialize_coloring(g, col);
            std::set<int> used;
            for (mgcolor::EdgeId e : g.edge_ids()) used.insert(col.color(e));
            std::cout << "# palette " << col.palette() << " used "
                      << used.size() << "\n";
        } else if (cmd_chi->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            std::cout << mgcolor::exact_chromatic_index(g).chi << "\n";
        } else if (cmd_gamma->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            int bound = std::max(3, g.vertex_count());
            std::cout << mgcolor::gamma(g, bound).str() << "\n";
        } else if (cmd_dense->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            for (const auto& d :
                 mgcolor::maximal_k_dense_subgraphs(g, dense_k)) {
                std::cout << "dense";
                for (mgcolor::Vertex v : d.vertices) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (cmd_extend->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            mgcolor::Precoloring p =
                mgcolor::parse_precoloring(read_file(precoloring_path), g);
            auto strat = strategy == "oracle-only"
                             ? mgcolor::Strategy::oracle_only
                             : mgcolor::Strategy::paper_first;
            auto result = mgcolor::extend_precoloring(g, p, strat);
            std::string text = mgcolor::serialize_coloring(g, result.coloring);
            if (output_path.empty())
                std::cout << text;
            else
                write_file(output_path, text);
            if (!trace_path.empty())
                write_file(trace_path, mgcolor::trace_to_json(result.trace));
        } else if (cmd_verify->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            mgcolor::Precoloring p =
                mgcolor::parse_precoloring(read_file(precoloring_path), g);
            auto col =
                mgcolor::parse_coloring(read_file(coloring_path), g);
            auto res = mgcolor::verify_extension(g, p, col);
            if (!res.ok) {
                for (const auto& d : res.diagnostics)
                    std::cout << d << "\n";
                return 1;
            }
            std::cout << "ok\n";
        } else if (cmd_trace->parsed()) {
            mgcolor::Multigraph g = mgcolor::parse_graph(read_file(graph_path));
            auto tr = mgcolor::trace_from_json(read_file(trace_path));
            auto col = mgcolor::replay_trace(g, tr);
            std::cout << mgcolor::serialize_coloring(g, col);
        }
    } catch (const mgcolor::InputError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const mgcolor::ResourceError& ex) {
        std::cerr << "resource error: " << ex.what() << "\n";
        return 3;
    } catch (const mgcolor::DefectError& ex) {
        std::cerr << "internal defect: " << ex.what() << "\n";
        return 4;
    }
    return 0;
}
