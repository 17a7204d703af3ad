#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgcolor/base_color.hpp"
#include "mgcolor/density.hpp"
#include "mgcolor/extend.hpp"
#include "mgcolor/io.hpp"
#include "mgcolor/oracle.hpp"

namespace py = pybind11;
using namespace mgcolor;

PYBIND11_MODULE(_mgcolor, m) {
    m.doc() = "multigraph edge-coloring engine";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<ResourceError>(m, "ResourceError");

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<int>(), py::arg("vertex_count"))
        .def("add_edge", &Multigraph::add_edge)
        .def("vertex_count", &Multigraph::vertex_count)
        .def("edge_count", &Multigraph::edge_count)
        .def("endpoints", &Multigraph::endpoints)
        .def("degree", &Multigraph::degree)
        .def("max_degree", &Multigraph::max_degree)
        .def("max_multiplicity", &Multigraph::max_multiplicity)
        .def("edge_distance", &Multigraph::edge_distance)
        .def("is_distance_matching", &Multigraph::is_distance_matching)
        .def("boundary", &Multigraph::boundary)
        .def("diameter", &Multigraph::diameter);

    py::class_<PartialEdgeColoring>(m, "PartialEdgeColoring")
        .def(py::init<const Multigraph&, int>())
        .def("palette", &PartialEdgeColoring::palette)
        .def("color", &PartialEdgeColoring::color)
        .def("assign", &PartialEdgeColoring::assign)
        .def("unassign", &PartialEdgeColoring::unassign)
        .def("is_proper", &PartialEdgeColoring::is_proper)
        .def("missing", &PartialEdgeColoring::missing);

    py::class_<Precoloring>(m, "Precoloring")
        .def(py::init<>())
        .def_readwrite("matching", &Precoloring::matching)
        .def_readwrite("colors", &Precoloring::colors);

    py::class_<DenseSubgraph>(m, "DenseSubgraph")
        .def_readonly("vertices", &DenseSubgraph::vertices)
        .def_readonly("k", &DenseSubgraph::k)
        .def_readonly("edge_count", &DenseSubgraph::edge_count)
        .def_readonly("boundary", &DenseSubgraph::boundary);

    m.def("parse_graph", &parse_graph);
    m.def("serialize_graph", &serialize_graph);
    m.def("serialize_coloring", &serialize_coloring);

    m.def("gamma", [](const Multigraph& g, int bound) {
        return gamma(g, bound).str();
    });
    m.def("chromatic_index",
          [](const Multigraph& g) { return exact_chromatic_index(g).chi; });
    m.def("vizing_gupta_color", &vizing_gupta_color);
    m.def("maximal_k_dense_subgraphs",
          [](const Multigraph& g, int k) {
              return maximal_k_dense_subgraphs(g, k);
          });
    m.def("extend_precoloring",
          [](const Multigraph& g, const Precoloring& p,
             const std::string& strategy) {
              auto res = extend_precoloring(
                  g, p,
                  strategy == "oracle-only" ? Strategy::oracle_only
                                            : Strategy::paper_first);
              return py::make_tuple(res.coloring, res.used_fallback);
          },
          py::arg("g"), py::arg("p"), py::arg("strategy") = "paper-first");
    m.def("verify_extension",
          [](const Multigraph& g, const Precoloring& p,
             const PartialEdgeColoring& c) {
              auto res = verify_extension(g, p, c);
              return py::make_tuple(res.ok, res.diagnostics);
          });
    m.def("brute_force_extension",
          [](const Multigraph& g, const Precoloring& p,
             int k) -> py::object {
              auto res = brute_force_extension(g, p, k);
              if (!res) return py::none();
              return py::cast(*res);
          });
}
