#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpack/bounds.hpp"
#include "lpack/constructor.hpp"
#include "lpack/error.hpp"
#include "lpack/oracle.hpp"
#include "lpack/report.hpp"

namespace py = pybind11;
using namespace lpack;

namespace {

Permutation as_perm(const std::vector<Vertex> &image) { return Permutation(image); }

py::dict step_dict(const TraceStep &s) {
  py::dict d;
  d["case"] = to_string(s.id);
  d["order"] = s.order;
  d["removed"] = s.removed;
  d["extension"] = s.extension;
  d["cycles_added"] = s.cycles_added;
  d["fallback"] = s.fallback;
  return d;
}

} // namespace

PYBIND11_MODULE(labeled_packing, m) {
  m.doc() = "Good permutations and labeled packing bounds for graphs with at "
            "most n-2 edges";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<Error> size_limit(m, "SizeLimitError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error &e) {
      if (e.kind() == ErrorKind::SizeLimit)
        PyErr_SetString(size_limit.ptr(), e.what());
      else
        PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<Edge> &>(), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", &Graph::neighbors)
      .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
      .def("__repr__", [](const Graph &g) {
        return "Graph(" + std::to_string(g.order()) + ", m=" +
               std::to_string(g.size()) + ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("serialize_graph", &serialize_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("kc3_2k1", &kc3_2k1, py::arg("k"));
  m.def("cm_2k1", &cm_2k1, py::arg("m"));
  m.def("tight_graph", &tight_graph, py::arg("k"));
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("m"),
        py::arg("seed"));
  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("m"));
  m.def("max_independent_set", &max_independent_set, py::arg("g"),
        py::arg("limit") = kDefaultMisLimit);

  m.def("cycle_decomposition", [](const std::vector<Vertex> &image) {
    return cycle_decomposition(as_perm(image)).cycles;
  });
  m.def("is_embedding", [](const Graph &g, const std::vector<Vertex> &image) {
    return is_embedding(g, as_perm(image));
  });
  m.def("is_good", [](const Graph &g, const std::vector<Vertex> &image) {
    return is_good(g, as_perm(image));
  });
  m.def("lower_bound_main", &lower_bound_main);
  m.def("lower_bound_woz", &lower_bound_woz);
  m.def(
      "upper_bound_mis",
      [](const Graph &g, std::size_t mis_limit) {
        return upper_bound_mis(g, mis_limit, 0).value;
      },
      py::arg("g"), py::arg("mis_limit") = kDefaultMisLimit);

  m.def(
      "construct_good",
      [](const Graph &g, std::size_t fallback_limit) {
        ConstructOptions opts;
        opts.fallback_limit = fallback_limit;
        const Construction c = construct_good(g, opts);
        py::list steps;
        for (const auto &s : c.trace.steps)
          steps.append(step_dict(s));
        py::dict out;
        out["permutation"] = c.perm.image();
        out["cycles"] = c.trace.final_cycles;
        out["steps"] = steps;
        return out;
      },
      py::arg("g"), py::arg("fallback_limit") = kDefaultInvolutionLimit);

  m.def(
      "exact_lambda2",
      [](const Graph &g, std::size_t limit) -> py::object {
        const OracleResult r = exact_lambda2(g, limit);
        if (!r.value)
          return py::none();
        return py::make_tuple(*r.value, r.witness->image());
      },
      py::arg("g"), py::arg("limit") = kDefaultOracleLimit,
      "(value, witness) or None when the graph has no embedding");

  m.def(
      "find_good_permutation",
      [](const Graph &g, std::size_t limit) -> py::object {
        if (auto p = find_good_permutation(g, limit))
          return py::cast(p->image());
        return py::none();
      },
      py::arg("g"), py::arg("limit") = kDefaultInvolutionLimit);

  m.def(
      "bounds_report",
      [](const Graph &g, bool oracle) {
        ReportOptions opts;
        opts.oracle = oracle;
        opts.include_trace = false;
        return py::module_::import("json").attr("loads")(
            to_json(make_report(g, opts).report).dump());
      },
      py::arg("g"), py::arg("oracle") = false);
}
