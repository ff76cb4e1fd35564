#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthocover/builders.hpp"
#include "orthocover/constructive.hpp"
#include "orthocover/io.hpp"
#include "orthocover/search.hpp"
#include "orthocover/verify.hpp"

namespace py = pybind11;
using namespace orthocover;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back({u, v});
    return out;
}

std::vector<ColourPair> to_pairs(const std::vector<std::pair<Colour, Colour>>& pairs) {
    std::vector<ColourPair> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

template <class T>
py::tuple outcome_tuple(SearchOutcome<T>&& outcome) {
    py::object witness = py::none();
    if (outcome.witness) witness = py::cast(std::move(*outcome.witness));
    return py::make_tuple(to_string(outcome.status), witness, outcome.nodes_used);
}

}  // namespace

PYBIND11_MODULE(_orthocover, m) {
    m.doc() = "Orthogonal colourings and independent coverings of graphs";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return Graph(n, to_edges(edges));
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("edges", [](const Graph& g) {
            std::vector<std::pair<Vertex, Vertex>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
        })
        .def("neighbours", [](const Graph& g, Vertex v) {
            auto span = g.neighbours(v);
            return std::vector<Vertex>(span.begin(), span.end());
        })
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::size_t, std::vector<std::vector<Vertex>>>(), py::arg("n"), py::arg("classes"))
        .def_property_readonly("classes", &Partition::classes)
        .def("class_of", &Partition::class_of)
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });

    py::class_<OrthogonalColouring>(m, "OrthogonalColouring")
        .def(py::init([](std::size_t colours, const std::vector<std::pair<Colour, Colour>>& pairs) {
                 return OrthogonalColouring(colours, to_pairs(pairs));
             }),
             py::arg("num_colours"), py::arg("pairs"))
        .def_property_readonly("num_colours", &OrthogonalColouring::num_colours)
        .def_property_readonly("pairs", [](const OrthogonalColouring& c) {
            std::vector<std::pair<Colour, Colour>> out;
            for (const auto& p : c.pairs()) out.emplace_back(p.first, p.second);
            return out;
        })
        .def("__eq__", [](const OrthogonalColouring& a, const OrthogonalColouring& b) { return a == b; });

    py::class_<Covering>(m, "Covering")
        .def(py::init<std::size_t, std::vector<std::vector<Vertex>>>(), py::arg("n"), py::arg("transversals"))
        .def_property_readonly("transversals", &Covering::transversals)
        .def("__eq__", [](const Covering& a, const Covering& b) { return a == b; });

    py::class_<GraphStats>(m, "GraphStats")
        .def_readonly("max_degree", &GraphStats::max_degree)
        .def_readonly("degeneracy", &GraphStats::degeneracy)
        .def_readonly("degenerate_ordering", &GraphStats::degenerate_ordering);

    m.def("is_independent_set", [](const Graph& g, const std::vector<Vertex>& s) { return is_independent_set(g, s); });
    m.def("is_proper", [](const Graph& g, const std::vector<Colour>& c) { return is_proper(g, c); });
    m.def("are_orthogonal", &are_orthogonal);
    m.def("is_valid_orthogonal_colouring", &is_valid_orthogonal_colouring);
    m.def("is_independent_transversal", [](const Graph& g, const Partition& p, const std::vector<Vertex>& t) {
        return is_independent_transversal(g, p, t);
    });
    m.def("is_independent_covering", &is_independent_covering);
    m.def("colouring_violation", &colouring_violation);
    m.def("covering_violation", &covering_violation);
    m.def("covering_to_colouring", &covering_to_colouring);
    m.def("colouring_to_covering", [](const Graph& g, const OrthogonalColouring& c) {
        auto result = colouring_to_covering(g, c);
        return py::make_tuple(result.partition, result.covering);
    });
    m.def("stats", &stats);

    m.def("figure1_graph", [] {
        auto pg = figure1_graph();
        return py::make_tuple(pg.graph, pg.partition);
    });
    m.def("three_333_graphs", [] {
        py::list out;
        for (auto& named : three_333_graphs()) out.append(py::make_tuple(named.name, named.graph, named.partition));
        return out;
    });
    m.def("paper_colouring", [](const std::string& name) { return paper_colouring(name); });
    m.def("double_star", &double_star, py::arg("m"));
    m.def("subdivided_double_star", &subdivided_double_star, py::arg("n"));
    m.def("random_nkk", [](std::size_t parts, std::size_t size, std::size_t matching, std::uint64_t seed) {
        auto pg = random_nkk({parts, size, matching, seed});
        return py::make_tuple(pg.graph, pg.partition);
    }, py::arg("parts"), py::arg("part_size"), py::arg("matching_size"), py::arg("seed"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("max_degree_cap"), py::arg("seed"));
    m.def("random_d_degenerate", &random_d_degenerate, py::arg("n"), py::arg("d"), py::arg("max_degree_cap"),
          py::arg("seed"));
    m.def("rook_graph", &rook_graph, py::arg("n"));

    m.def("find_orthogonal_colouring", [](const Graph& g, std::size_t colours, std::uint64_t budget) {
        SearchBudget b(budget);
        return outcome_tuple(find_orthogonal_colouring(g, colours, b));
    }, py::arg("graph"), py::arg("num_colours"), py::arg("budget") = default_budget,
       "Returns (status, colouring or None, nodes_used).");
    m.def("ochi", [](const Graph& g, std::uint64_t budget) {
        SearchBudget b(budget);
        auto outcome = ochi(g, b);
        if (!outcome.found()) throw BudgetExhausted("ochi search ran out of budget");
        return py::make_tuple(outcome.witness->value, outcome.witness->witness);
    }, py::arg("graph"), py::arg("budget") = default_budget);
    m.def("find_independent_covering", [](const Graph& g, const Partition& p, std::uint64_t budget) {
        SearchBudget b(budget);
        return outcome_tuple(find_independent_covering(g, p, b));
    }, py::arg("graph"), py::arg("partition"), py::arg("budget") = default_budget);
    m.def("perfect_orthogonal_check", [](const Graph& g, std::uint64_t budget) {
        SearchBudget b(budget);
        return perfect_orthogonal_check(g, b);
    }, py::arg("graph"), py::arg("budget") = default_budget);

    m.def("hall_covering", [](const Graph& g, const Partition& p) {
        auto result = hall_covering(g, p);
        return py::make_tuple(result.colouring, result.covering);
    });
    m.def("double_star_colouring", &double_star_colouring, py::arg("m"));
    m.def("degenerate_swap_colouring", [](const Graph& g, bool force) {
        auto result = degenerate_swap_colouring(g, {.force = force, .check_invariants = true});
        return py::make_tuple(result.colouring, result.valid, result.steps.size());
    }, py::arg("graph"), py::arg("force") = false);

    m.def("to_json", [](const Graph& g) { return to_json(g).dump(); });
    m.def("to_json", [](const Partition& p) { return to_json(p).dump(); });
    m.def("to_json", [](const OrthogonalColouring& c) { return to_json(c).dump(); });
    m.def("to_json", [](const Covering& c) { return to_json(c).dump(); });
    m.def("graph_from_json", [](const std::string& s) { return graph_from_json(nlohmann::json::parse(s)); });
    m.def("colouring_from_json", [](const std::string& s) { return colouring_from_json(nlohmann::json::parse(s)); });
    m.def("export_dot", [](const Graph& g, const OrthogonalColouring* c, const std::vector<std::string>& names) {
        return export_dot(g, c, names);
    }, py::arg("graph"), py::arg("colouring") = nullptr, py::arg("names") = std::vector<std::string>{});

    m.def("verify_claim", [](const std::string& id, std::uint64_t budget, std::uint64_t seed) {
        VerifyOptions options;
        options.budget = budget;
        options.seed = seed;
        auto r = run_claim(id, options);
        return py::make_tuple(std::string(to_string(r.status)), r.detail);
    }, py::arg("claim_id"), py::arg("budget") = default_budget, py::arg("seed") = VerifyOptions{}.seed);
}
