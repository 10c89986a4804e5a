// Python bindings for the core pipelines: graphicality, realization,
// connectivity analysis, rewiring, factors, and the brute-force oracles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxcon/cuts.hpp"
#include "maxcon/degree_sequence.hpp"
#include "maxcon/factors.hpp"
#include "maxcon/graph_io.hpp"
#include "maxcon/matching.hpp"
#include "maxcon/oracle.hpp"
#include "maxcon/rewire.hpp"

namespace py = pybind11;
using namespace maxcon;

namespace {

DegreeSequence make_sequence(const std::vector<int>& terms) {
    return DegreeSequence::sorted(terms);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

py::dict certificate_dict(const RewireCertificate& c) {
    py::dict d;
    d["final_lambda"] = c.final_lambda;
    d["final_delta"] = c.final_delta;
    d["moves_applied"] = c.moves_applied;
    d["preserved_edges_ok"] = c.preserved_edges_ok;
    d["mode_target_met"] = c.mode_target_met;
    return d;
}

}  // namespace

PYBIND11_MODULE(_maxcon, m) {
    m.doc() = "degree-sequence realization, edge-connectivity rewiring, and factor tools";

    py::register_exception<HypothesisViolation>(m, "HypothesisViolation");
    py::register_exception<TheoremContradiction>(m, "TheoremContradiction");
    py::register_exception<ScaleError>(m, "ScaleError");
    py::register_exception<ValidationError>(m, "ValidationError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("complement", &Graph::complement)
        .def("is_subgraph_of", &Graph::is_subgraph_of)
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("is_graphic",
          [](const std::vector<int>& terms) { return is_graphic(make_sequence(terms)); },
          "Erdos-Gallai test for a degree sequence (any order).");
    m.def("realize",
          [](const std::vector<int>& terms) { return realize(make_sequence(terms)); },
          "One realization; vertex i+1 receives the i-th input term.");
    m.def("connectivity_feasible",
          [](const std::vector<int>& terms, int k) {
              return edmonds_feasible(make_sequence(terms), k);
          },
          py::arg("terms"), py::arg("k"),
          "Whether a k-edge-connected realization exists.");

    m.def("edge_connectivity", &edge_connectivity_value);
    m.def("min_cuts", [](const Graph& g) {
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const Cut& c : enumerate_min_cuts(g)) out.emplace_back(c.side.vertices(), c.value);
        return out;
    });

    m.def("maximum_matching", &maximum_matching);
    m.def("perfect_matching", [](const Graph& g) -> py::object {
        auto mm = perfect_matching(g);
        if (!mm) return py::none();
        return py::cast(*mm);
    });

    m.def(
        "rewire",
        [](const Graph& g0, const Graph& f, const Graph& z0, const std::string& mode) {
            Graph protected_f = f.vertex_count() ? f : Graph(g0.vertex_count());
            RewireProblem p{g0, protected_f,
                            z0.vertex_count() ? z0 : subtract_edges(g0, protected_f),
                            mode == "relaxed" ? RewireMode::Relaxed : RewireMode::Full};
            RewireResult r = rewire(p);
            std::vector<std::tuple<int, int, int, int>> trace;
            for (const auto& mv : r.trace) trace.emplace_back(mv.a, mv.a_prime, mv.b, mv.b_prime);
            return py::make_tuple(r.graph, certificate_dict(r.certificate), trace);
        },
        py::arg("g0"), py::arg("f") = Graph(), py::arg("z0") = Graph(),
        py::arg("mode") = "full",
        "Raise edge connectivity by degree-preserving exchanges; returns "
        "(graph, certificate, move_trace).");

    m.def(
        "kundu_realize",
        [](const std::vector<int>& terms, const std::vector<int>& kappa) {
            int k = kappa.empty() ? 0 : *std::min_element(kappa.begin(), kappa.end());
            auto [g, factor] = kundu_realize({make_sequence(terms), kappa, k});
            return py::make_tuple(g, factor);
        },
        py::arg("terms"), py::arg("kappa"),
        "Realization containing a factor with the given per-vertex degrees.");

    m.def(
        "maxcon_with_factor",
        [](const std::vector<int>& terms, const std::vector<int>& kappa) {
            int k = kappa.empty() ? 0 : *std::min_element(kappa.begin(), kappa.end());
            auto r = maxcon_with_factor({make_sequence(terms), kappa, k});
            return py::make_tuple(r.g, r.factor, certificate_dict(r.certificate));
        },
        py::arg("terms"), py::arg("kappa"));

    m.def(
        "peel_one_factors",
        [](const std::vector<int>& terms, int k, int r, bool complement) {
            auto d = complement ? peel_complement_case(make_sequence(terms), k, r)
                                : peel_one_factors(make_sequence(terms), k, r);
            return py::make_tuple(d.g, d.factor, d.one_factors, d.residual);
        },
        py::arg("terms"), py::arg("k"), py::arg("r") = 0, py::arg("complement") = false,
        "k-factor with r+1 edge-disjoint perfect matchings: "
        "(graph, factor, matchings, residual).");

    m.def("encode_graph6", &encode_graph6);
    m.def("decode_graph6", &decode_graph6);

    m.def("count_realizations",
          [](const std::vector<int>& terms) { return oracle::count_realizations(make_sequence(terms)); });
    m.def("brute_min_cut", [](const Graph& g) {
        auto [lambda, shores] = oracle::brute_min_cut(g);
        std::vector<std::vector<int>> sides;
        for (const auto& s : shores) sides.push_back(s.vertices());
        return py::make_tuple(lambda, sides);
    });
    m.def(
        "check_theorem",
        [](const std::string& id, int max_n, int samples, unsigned seed) {
            auto rep = oracle::check_theorem(id, {max_n, samples, seed});
            py::dict d;
            d["theorem"] = rep.theorem_id;
            d["instances_checked"] = rep.instances_checked;
            d["failures"] = rep.failures;
            d["ok"] = rep.ok();
            return d;
        },
        py::arg("theorem_id"), py::arg("max_n") = 6, py::arg("samples") = 100,
        py::arg("seed") = 0);
}
