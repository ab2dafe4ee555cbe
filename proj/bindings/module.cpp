// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coqa/bench.hpp"
#include "coqa/errors.hpp"
#include "coqa/verifier.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "coqa core bindings";
  m.attr("__version__") = std::string(coqa::kVersion);

  auto error = py::register_exception<coqa::Error>(m, "CoqaError", PyExc_RuntimeError);
  py::register_exception<coqa::CapacityError>(m, "CapacityError", error);
  py::register_exception<coqa::ParseError>(m, "ParseError", error);
  py::register_exception<coqa::ParameterError>(m, "ParameterError", error);
  py::register_exception<coqa::LinearizationError>(m, "LinearizationError", error);
  py::register_exception<coqa::ScopeError>(m, "ScopeError", error);

  py::class_<coqa::ProblemGraph>(m, "ProblemGraph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("num_nodes", &coqa::ProblemGraph::num_nodes)
      .def_property_readonly("num_edges", &coqa::ProblemGraph::num_edges)
      .def("set_weight", &coqa::ProblemGraph::set_weight)
      .def("weight", &coqa::ProblemGraph::weight)
      .def("edges", [](const coqa::ProblemGraph& g) {
        std::vector<std::tuple<int, int, double>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.i, e.j, e.w);
        return out;
      });

  m.def("gen_erdos_renyi", [](int n, double p, std::uint64_t seed) { return coqa::gen_erdos_renyi(n, p, seed); },
        py::arg("n"), py::arg("p"), py::arg("seed") = 0);
  m.def("gen_k_regular", [](int n, int k, std::uint64_t seed) { return coqa::gen_k_regular(n, k, seed); },
        py::arg("n"), py::arg("k"), py::arg("seed") = 0);
  m.def("gen_clique", &coqa::gen_clique);
  m.def("load_graph", [](const std::string& s) { return coqa::load_graph(s); });
  m.def("save_graph", &coqa::save_graph);

  py::class_<coqa::LinearLayout>(m, "LinearLayout")
      .def_property_readonly("backbone", &coqa::LinearLayout::backbone)
      .def_property_readonly("danglers", [](const coqa::LinearLayout& l) {
        std::vector<std::pair<int, int>> out;
        for (const auto& d : l.danglers()) out.emplace_back(d.position, d.qubit);
        return out;
      })
      .def_property_readonly("capacity", &coqa::LinearLayout::capacity)
      .def("links", &coqa::LinearLayout::links);
  m.def("synthetic_line", &coqa::synthetic_line, py::arg("n_backbone"), py::arg("dangler_stride"));
  m.def("heavy_hex_layout", [](int rows, int cols) { return coqa::linearize(coqa::build_heavy_hex(rows, cols)); });
  m.def("heavy_hex_links", [](int rows, int cols) {
    const auto cm = coqa::build_heavy_hex(rows, cols);
    return std::make_pair(cm.num_qubits(), cm.links());
  });
  m.def("layout_from_spec", [](const std::string& spec, int n) { return coqa::layout_from_spec(spec, n); });

  py::class_<coqa::Circuit>(m, "Circuit")
      .def_property_readonly("num_qubits", &coqa::Circuit::num_qubits)
      .def("__len__", &coqa::Circuit::size)
      .def("depth", [](const coqa::Circuit& c) { return coqa::two_qubit_depth(c); })
      .def("count", [](const coqa::Circuit& c, const std::string& mode) {
        return coqa::two_qubit_count(c, coqa::parse_count_mode(mode));
      }, py::arg("mode") = "abstract")
      .def("to_qasm", &coqa::export_qasm)
      .def("to_native", &coqa::save_circuit);
  m.def("load_circuit", [](const std::string& s) { return coqa::load_circuit(s); });
  m.def("fuse_zz_swap", &coqa::fuse_zz_swap);

  py::class_<coqa::RouteStats>(m, "RouteStats")
      .def_readonly("swap_count", &coqa::RouteStats::swap_count)
      .def_readonly("zz_count", &coqa::RouteStats::zz_count)
      .def_readonly("depth", &coqa::RouteStats::depth)
      .def_readonly("elided_swaps", &coqa::RouteStats::elided_swaps)
      .def_readonly("termination_step", &coqa::RouteStats::termination_step);

  py::class_<coqa::RouteResult>(m, "RouteResult")
      .def_readonly("circuit", &coqa::RouteResult::circuit)
      .def_readonly("stats", &coqa::RouteResult::stats)
      .def_property_readonly("initial_mapping", [](const coqa::RouteResult& r) { return r.initial_mapping.log2phys; })
      .def_property_readonly("final_mapping", [](const coqa::RouteResult& r) { return r.final_mapping.log2phys; });

  auto make_opts = [](int layers, double gamma, const std::string& placement, bool fuse, bool prune,
                      bool restore) {
    coqa::RouteOptions o;
    o.layers = layers;
    o.gamma = gamma;
    o.placement = coqa::parse_placement(placement);
    o.fuse = fuse;
    o.prune = prune;
    o.restore_permutation = restore;
    return o;
  };
  m.def("route",
        [make_opts](const coqa::ProblemGraph& g, const coqa::LinearLayout& layout, int layers, double gamma,
                    const std::string& placement, bool fuse, bool prune, bool restore) {
          return coqa::route(g, layout, make_opts(layers, gamma, placement, fuse, prune, restore));
        },
        py::arg("graph"), py::arg("layout"), py::arg("layers") = 1, py::arg("gamma") = 1.0,
        py::arg("placement") = "identity", py::arg("fuse") = true, py::arg("prune") = true,
        py::arg("restore_permutation") = false);
  m.def("route_baseline",
        [make_opts](const coqa::ProblemGraph& g, const coqa::LinearLayout& layout, int layers, double gamma) {
          return coqa::route_baseline_clique_pattern(g, layout, make_opts(layers, gamma, "identity", true, false, false));
        },
        py::arg("graph"), py::arg("layout"), py::arg("layers") = 1, py::arg("gamma") = 1.0);

  m.def("audit_json", [](const coqa::ProblemGraph& g, const coqa::RouteResult& r, const coqa::LinearLayout& l) {
    return coqa::audit(g, r, l).to_json();
  });
  m.def("phase_poly_ok", [](const coqa::ProblemGraph& g, const coqa::RouteResult& r) {
    return coqa::phase_poly_matches(coqa::phase_poly_of(r.circuit), g, r.gammas, r.initial_mapping,
                                    r.final_mapping);
  });
  m.def("statevector_equiv", [](const coqa::Circuit& a, const coqa::Circuit& b, int n) {
    return coqa::statevector_equiv(a, b, n);
  });
}
