// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wpeb/enumerate.hpp"
#include "wpeb/io.hpp"
#include "wpeb/path_weights.hpp"
#include "wpeb/solver.hpp"
#include "wpeb/tree.hpp"
#include "wpeb/weight_search.hpp"

namespace py = pybind11;
using namespace wpeb;

namespace {

// Weights cross the boundary as fractions.Fraction; ints and "b/a" strings are
// accepted on the way in.
Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
    if (py::isinstance<py::float_>(obj)) throw py::type_error("weights must be exact: use Fraction, int or 'b/a'");
    if (!py::hasattr(obj, "numerator") || !py::hasattr(obj, "denominator")) {
        throw py::type_error("cannot convert weight to a fraction");
    }
    return {obj.attr("numerator").cast<std::int64_t>(), obj.attr("denominator").cast<std::int64_t>()};
}

py::object to_fraction(const Rational& r) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

py::list fractions(const std::vector<Rational>& ws) {
    py::list out;
    for (const auto& w : ws) out.append(to_fraction(w));
    return out;
}

py::object count_or_none(const ExtCount& c) { return c.is_finite() ? py::object(py::int_(c.value())) : py::none(); }

WeightedGraph make_graph(std::size_t n, const py::iterable& edges) {
    std::vector<Edge> es;
    for (const auto& item : edges) {
        const auto t = item.cast<py::tuple>();
        if (t.size() != 3) throw py::value_error("edges are (u, v, weight) triples");
        es.push_back({t[0].cast<Vertex>(), t[1].cast<Vertex>(), to_rational(t[2])});
    }
    return {n, std::move(es)};
}

SearchControl control_from(std::optional<std::int64_t> max_denominator, const py::object& upper_bound,
                           std::optional<double> budget) {
    SearchControl c;
    if (max_denominator) c.grid = GridSpec::with_max_denominator(*max_denominator);
    if (!upper_bound.is_none()) c.upper_bound = to_rational(upper_bound);
    if (budget) {
        c.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*budget));
    }
    return c;
}

}  // namespace

PYBIND11_MODULE(_wpeb, m) {
    m.doc() = "Weighted graph pebbling: exact solver, tree formula, path weights and weight searches.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"),
             "Graph on vertices 0..n-1 from (u, v, weight) triples.")
        .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def_property_readonly("edges",
                               [](const WeightedGraph& g) {
                                   py::list out;
                                   for (const auto& e : g.edges()) out.append(py::make_tuple(e.u, e.v, to_fraction(e.weight)));
                                   return out;
                               })
        .def_property_readonly("weights", [](const WeightedGraph& g) { return fractions(g.weights()); })
        .def("with_weights",
             [](const WeightedGraph& g, const py::iterable& ws) {
                 std::vector<Rational> w;
                 for (const auto& x : ws) w.push_back(to_rational(x));
                 return g.with_weights(w);
             })
        .def("is_connected", &WeightedGraph::is_connected)
        .def("is_tree", &WeightedGraph::is_tree)
        .def("__repr__", [](const WeightedGraph& g) {
            std::ostringstream s;
            s << "Graph(" << g.vertex_count() << ", [";
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                const auto& e = g.edge(i);
                s << (i ? ", " : "") << "(" << e.u << ", " << e.v << ", '" << e.weight << "')";
            }
            s << "])";
            return s.str();
        });

    m.def(
        "parse_graph",
        [](const std::string& text) {
            std::istringstream in(text);
            auto ng = parse_graph(in, "<string>");
            return py::make_tuple(ng.graph, ng.names);
        },
        py::arg("text"), "Parses 'u v weight' lines; returns (graph, vertex names).");

    m.def(
        "solve",
        [](const WeightedGraph& g, std::vector<std::int64_t> counts, Vertex target) {
            const Configuration c(std::move(counts));
            SolveCertificate cert;
            {
                py::gil_scoped_release release;
                cert = is_solvable(g, c, target);
            }
            py::list moves;
            for (const auto& mv : cert.moves) moves.append(py::make_tuple(mv.from, mv.to, mv.removed, mv.delivered));
            return py::make_tuple(cert.solvable, moves);
        },
        py::arg("graph"), py::arg("counts"), py::arg("target"),
        "Returns (solvable, moves); each move is (from, to, removed, delivered).");

    m.def(
        "is_p_solvable",
        [](const WeightedGraph& g, std::int64_t p) -> py::tuple {
            PSolvability res;
            {
                py::gil_scoped_release release;
                res = is_p_solvable(g, p);
            }
            if (res.solvable || !res.witness) return py::make_tuple(res.solvable, py::none(), py::none());
            return py::make_tuple(false, res.witness->configuration.counts(), res.witness->target);
        },
        py::arg("graph"), py::arg("p"), "Returns (solvable, failing counts or None, target or None).");

    m.def(
        "pebbling_number",
        [](const WeightedGraph& g, std::optional<Vertex> target) {
            ExtCount c;
            {
                py::gil_scoped_release release;
                c = target ? pebbling_number(g, *target) : pebbling_number(g);
            }
            return count_or_none(c);
        },
        py::arg("graph"), py::arg("target") = py::none(), "None when no finite number exists.");

    m.def(
        "max_path_partition",
        [](const WeightedGraph& t, Vertex target) {
            py::list out;
            for (const auto& p : max_path_partition(t, target).paths) out.append(py::make_tuple(p.vertices, p.requirement));
            return out;
        },
        py::arg("tree"), py::arg("target"), "List of (vertices, requirement).");
    m.def("tree_wp_target", &tree_wp_target, py::arg("tree"), py::arg("target"),
          "Path partition value; a lower bound on the pebbling number for the target.");
    m.def(
        "tree_wp", [](const WeightedGraph& t) { return count_or_none(tree_wp(t)); }, py::arg("tree"));
    m.def("chung_number", &chung_number, py::arg("tree"));

    m.def(
        "path_weight_search",
        [](std::int64_t n, std::int64_t p) {
            PathWeightResult r;
            {
                py::gil_scoped_release release;
                r = path_weight_search(n, p);
            }
            return py::make_tuple(to_fraction(r.weight), fractions(r.witness.weights));
        },
        py::arg("n"), py::arg("p"), "Returns (min total weight, per-edge weights) for a path with n edges.");
    m.def(
        "one_way_weight",
        [](std::int64_t p, std::int64_t length, std::int64_t k) -> py::object {
            auto r = one_way_weight(p, length, k);
            return r ? to_fraction(r->weight) : py::none();
        },
        py::arg("p"), py::arg("length"), py::arg("k"));
    m.def(
        "wp2_closed_form", [](std::int64_t p) { return to_fraction(wp2_closed_form(p)); }, py::arg("p"));
    m.def(
        "path_lower_bound",
        [](std::int64_t n, std::int64_t p) {
            const auto lb = path_lower_bound(n, p);
            const auto exact = lb.exact();
            return py::make_tuple(lb.symbolic(), exact ? to_fraction(*exact) : py::none(), lb.approx());
        },
        py::arg("n"), py::arg("p"), "Returns (symbolic, exact Fraction or None, float approximation).");

    m.def(
        "min_weight_function",
        [](const WeightedGraph& g, std::int64_t p, std::optional<std::int64_t> max_denominator,
           const py::object& upper_bound, std::optional<double> budget) -> py::object {
            const SearchControl c = control_from(max_denominator, upper_bound, budget);
            std::optional<MinWeightResult> r;
            {
                py::gil_scoped_release release;
                r = min_weight_function(g, p, c);
            }
            if (!r) return py::none();
            return py::make_tuple(to_fraction(r->value), fractions(r->witness.weights));
        },
        py::arg("graph"), py::arg("p"), py::arg("max_denominator") = py::none(), py::arg("upper_bound") = py::none(),
        py::arg("budget") = py::none(), "Returns (total, weights) or None.");
    m.def(
        "weighted_pebbling_number",
        [](const WeightedGraph& g, std::optional<std::int64_t> max_denominator, std::optional<double> budget) {
            const SearchControl c = control_from(max_denominator, py::none(), budget);
            WpResult r;
            {
                py::gil_scoped_release release;
                r = weighted_pebbling_number(g, c);
            }
            return py::make_tuple(r.value, fractions(r.witness.weights));
        },
        py::arg("graph"), py::arg("max_denominator") = py::none(), py::arg("budget") = py::none(),
        "Returns (wp, weights of total |E|/2).");

    m.def("trees", &trees, py::arg("n"));
    m.def("connected_graphs", &connected_graphs, py::arg("n"));
    m.def(
        "star_graph", [](std::size_t k, const py::object& w) { return star_graph(k, to_rational(w)); }, py::arg("leaves"),
        py::arg("weight") = "1/2");
    m.def(
        "complete_graph", [](std::size_t n, const py::object& w) { return complete_graph(n, to_rational(w)); },
        py::arg("n"), py::arg("weight") = "1/2");
    m.def(
        "uniform_path", [](std::size_t e, const py::object& w) { return uniform_path(e, to_rational(w)); },
        py::arg("edges"), py::arg("weight") = "1/2");
}
