#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nfc/criticality.hpp"
#include "nfc/graph.hpp"
#include "nfc/harness.hpp"
#include "nfc/matching.hpp"
#include "nfc/oracle.hpp"

namespace py = pybind11;
using namespace nfc;

namespace {

py::object witness_to_py(const Witness& w) {
    if (std::holds_alternative<FailingVertex>(w)) {
        py::dict d;
        d["type"] = "failing-vertex";
        d["v"] = std::get<FailingVertex>(w).v;
        return d;
    }
    if (std::holds_alternative<TutteWitness>(w)) {
        const auto& tw = std::get<TutteWitness>(w);
        py::dict d;
        d["type"] = "tutte-set";
        d["s"] = tw.s;
        d["odd_count"] = tw.odd_count;
        return d;
    }
    if (std::holds_alternative<StructuralCase>(w)) {
        py::dict d;
        d["type"] = "structural-case";
        d["tag"] = to_string(std::get<StructuralCase>(w));
        return d;
    }
    if (std::holds_alternative<ParityFailure>(w)) {
        py::dict d;
        d["type"] = "parity-failure";
        return d;
    }
    return py::none();
}

py::dict verdict_to_py(const CriticalityVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["witness"] = witness_to_py(v.witness);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "near-factor-critical graph toolkit";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::size)
        .def_property_readonly("edges",
                               [](const Graph& g) { return g.edges(); })
        .def("neighbors", &Graph::neighbors)
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) +
                   ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<Matching>(m, "Matching")
        .def(py::init([](std::vector<Edge> edges) {
                 return Matching{std::move(edges)};
             }),
             py::arg("edges") = std::vector<Edge>{})
        .def_readonly("edges", &Matching::edges)
        .def("__len__", &Matching::size);

    py::class_<NearFactor>(m, "NearFactor")
        .def_readonly("matching", &NearFactor::matching)
        .def_readonly("unsaturated", &NearFactor::unsaturated);

    py::class_<TutteWitness>(m, "TutteWitness")
        .def_readonly("s", &TutteWitness::s)
        .def_readonly("odd_count", &TutteWitness::odd_count);

    // graph core
    m.def("parse_graph",
          [](const std::string& text) { return parse_graph(text); });
    m.def("serialize_graph", &serialize_graph);
    m.def("components", [](const Graph& g) { return components(g).components; });
    m.def("count_odd_components", &count_odd_components);
    m.def("delete_vertices", [](const Graph& g, const std::vector<Vertex>& s) {
        auto del = delete_vertices(g, s);
        return py::make_tuple(del.graph, del.old_to_new);
    });
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("star_graph", &star_graph);
    m.def("empty_graph", &empty_graph);
    m.def("disjoint_union", &disjoint_union);
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"),
          py::arg("seed"));

    // matching engine
    m.def("max_matching", &max_matching);
    m.def("has_perfect_matching", &has_perfect_matching);
    m.def("find_near_factor", &find_near_factor);
    m.def("unsaturated_vertices", &unsaturated_vertices);

    // criticality
    m.def("is_factor_critical",
          [](const Graph& g) { return verdict_to_py(is_factor_critical(g)); });
    m.def("is_nfc_by_definition", [](const Graph& g) {
        return verdict_to_py(is_nfc_by_definition(g));
    });
    m.def("is_nfc_by_theorem",
          [](const Graph& g) { return verdict_to_py(is_nfc_by_theorem(g)); });
    m.def("tutte_witness", &tutte_witness, py::arg("g"),
          py::arg("max_n") = kTutteSearchBound, py::arg("force") = false);
    m.def("check_lemma1", &check_lemma1, py::arg("g"), py::arg("s"),
          py::arg("h"), py::arg("v"), py::arg("m"));

    // oracle
    m.def("oracle_all_matchings", &oracle::all_matchings);
    m.def("oracle_max_matching_size", &oracle::max_matching_size_brute);
    m.def("oracle_has_perfect", &oracle::has_perfect_brute);
    m.def("oracle_has_near_factor", &oracle::has_near_factor_brute);

    // harness
    m.def(
        "verify_theorems",
        [](int n_max, const std::string& mode, int count, std::uint64_t seed,
           int jobs) {
            VerifyOptions options;
            options.mode = mode == "random" ? VerifyOptions::Mode::kRandom
                                            : VerifyOptions::Mode::kExhaustive;
            options.random_count = count;
            options.seed = seed;
            options.jobs = jobs;
            py::list out;
            for (const auto& r : verify_theorems(n_max, options)) {
                py::dict d;
                d["order"] = r.order;
                d["graphs_checked"] = r.graphs_checked;
                d["nfc_count"] = r.nfc_count;
                d["factor_critical_count"] = r.factor_critical_count;
                d["perfect_matching_count"] = r.perfect_matching_count;
                py::list mm;
                for (const auto& x : r.mismatches)
                    mm.append(py::make_tuple(x.kind, x.graph));
                d["mismatches"] = mm;
                out.append(d);
            }
            return out;
        },
        py::arg("n_max"), py::arg("mode") = "exhaustive",
        py::arg("count") = 1000, py::arg("seed") = 1, py::arg("jobs") = 1);
}
