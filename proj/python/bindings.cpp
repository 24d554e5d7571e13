#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsr/canon.hpp"
#include "qsr/catalog.hpp"
#include "qsr/enumerate.hpp"
#include "qsr/errors.hpp"
#include "qsr/graph6.hpp"
#include "qsr/qsr.hpp"
#include "qsr/version.hpp"

namespace py = pybind11;
using namespace qsr;

namespace {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for (int v : s) out.push_back(v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quasi-strongly regular graph toolkit";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "QsrError");

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbours",
             [](const Graph& g, int v) { return set_to_list(g.neighbours(v)); }, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.order() << ", edges=" << g.edge_count() << ")";
            return os.str();
        });

    py::class_<QsrSignature>(m, "QsrSignature")
        .def_readonly("n", &QsrSignature::n)
        .def_readonly("k", &QsrSignature::k)
        .def_readonly("a", &QsrSignature::a)
        .def_readonly("c_values", &QsrSignature::c_values)
        .def_readonly("grade", &QsrSignature::grade)
        .def_readonly("proper", &QsrSignature::proper)
        .def_readonly("strict", &QsrSignature::strict)
        .def("__repr__", [](const QsrSignature& s) {
            std::ostringstream os;
            os << "QsrSignature(n=" << s.n << ", k=" << s.k << ", a=" << s.a << ", c=[";
            for (std::size_t i = 0; i < s.c_values.size(); ++i)
                os << (i ? "," : "") << s.c_values[i];
            os << "], grade=" << s.grade << ", strict=" << (s.strict ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<Bounds>(m, "Bounds")
        .def_readonly("k", &Bounds::k)
        .def_readonly("lower", &Bounds::lower)
        .def_readonly("upper", &Bounds::upper)
        .def("__repr__", [](const Bounds& b) {
            std::ostringstream os;
            os << "Bounds(k=" << b.k << ", lower=" << b.lower << ", upper=" << b.upper << ")";
            return os.str();
        });

    py::class_<EnumReport>(m, "EnumReport")
        .def_property_readonly("classes",
                               [](const EnumReport& r) {
                                   std::vector<std::string> out;
                                   for (const auto& c : r.classes) out.push_back(c.bytes);
                                   return out;
                               })
        .def_readonly("nodes_explored", &EnumReport::nodes_explored)
        .def_readonly("complete", &EnumReport::complete)
        .def_readonly("elapsed_seconds", &EnumReport::elapsed_seconds);

    m.def("encode_graph6", &encode_graph6, py::arg("graph"));
    m.def("decode_graph6", [](const std::string& s) { return decode_graph6(s); },
          py::arg("line"));

    m.def("analyze", &analyze, py::arg("graph"));
    m.def("matches", &matches, py::arg("graph"), py::arg("n"), py::arg("k"), py::arg("a"),
          py::arg("c_values"), py::arg("strict") = false);
    m.def("explain_mismatch",
          [](const Graph& g, int n, int k, int a, const std::vector<int>& c, bool strict)
              -> py::object {
              const auto r = explain_mismatch(g, n, k, a, c, strict);
              return r ? py::cast(*r) : py::none();
          },
          py::arg("graph"), py::arg("n"), py::arg("k"), py::arg("a"), py::arg("c_values"),
          py::arg("strict") = false);
    m.def("t_profile",
          [](const Graph& g, int v, const std::vector<int>& c_list) {
              const TProfile p = t_profile(g, v, c_list);
              std::vector<std::pair<int, int>> counts(p.counts.begin(), p.counts.end());
              return counts;
          },
          py::arg("graph"), py::arg("vertex"), py::arg("c_list"));
    m.def("sqsr_bounds", &sqsr_bounds, py::arg("k"));
    m.def("independence_number", &independence_number, py::arg("graph"));

    m.def("canonical_form", [](const Graph& g) { return canonical_form(g).bytes; },
          py::arg("graph"));
    m.def("automorphism_count", &automorphism_count, py::arg("graph"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));

    m.def("build_named", &build_named, py::arg("name"));
    m.def("catalog_names", &catalog_names);

    m.def(
        "enumerate_graphs",
        [](int n, int k, int a, const std::vector<int>& c_allowed, bool proper, bool strict,
           int jobs, bool star_shortcut, bool override_budget) {
            EnumSpec spec;
            spec.n = n;
            spec.k = k;
            spec.a = a;
            spec.c_allowed = c_allowed;
            spec.require_all_realized = proper;
            spec.require_strict = strict;
            EnumOptions options;
            options.jobs = jobs;
            options.star_shortcut = star_shortcut;
            options.override_budget = override_budget;
            return enumerate_graphs(spec, options);
        },
        py::arg("n"), py::arg("k"), py::arg("a"), py::arg("c_allowed"),
        py::arg("proper") = false, py::arg("strict") = false, py::arg("jobs") = 1,
        py::arg("star_shortcut") = true, py::arg("override_budget") = false,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "brute_force_enumerate",
        [](int n, int k, int a, const std::vector<int>& c_allowed, bool proper, bool strict) {
            EnumSpec spec;
            spec.n = n;
            spec.k = k;
            spec.a = a;
            spec.c_allowed = c_allowed;
            spec.require_all_realized = proper;
            spec.require_strict = strict;
            return brute_force_enumerate(spec);
        },
        py::arg("n"), py::arg("k"), py::arg("a"), py::arg("c_allowed"),
        py::arg("proper") = false, py::arg("strict") = false,
        py::call_guard<py::gil_scoped_release>());
}
