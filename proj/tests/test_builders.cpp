#include <doctest.h>

#include <map>

#include "graph_helpers.hpp"
#include "orthocover/builders.hpp"
#include "orthocover/constructive.hpp"

using namespace orthocover;
using namespace orthocover::testing;

namespace {

enum : Vertex { X0, X1, X2, Y0, Y1, Y2, Z0, Z1, Z2 };

// Classes independent and every class pair joined by a matching of exactly r edges.
bool is_nkr_partite(const Graph& g, const Partition& p, std::size_t r) {
    for (const auto& cls : p.classes())
        if (!is_independent_set(g, cls)) return false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> between;
    std::vector<std::map<std::size_t, std::size_t>> per_vertex(g.order());
    for (const auto& e : g.edges()) {
        auto a = p.class_of(e.u), b = p.class_of(e.v);
        if (++per_vertex[e.u][b] > 1 || ++per_vertex[e.v][a] > 1) return false;
        ++between[{std::min(a, b), std::max(a, b)}];
    }
    for (std::size_t a = 0; a < p.class_count(); ++a)
        for (std::size_t b = a + 1; b < p.class_count(); ++b)
            if (between[{a, b}] != r) return false;
    return true;
}

}  // namespace

TEST_CASE("figure1 graph structure") {
    const auto [g, p] = figure1_graph();
    CHECK(g.order() == 9);
    CHECK(g.size() == 9);
    CHECK(component_sizes(g) == std::vector<std::size_t>{3, 6});
    CHECK(g.adjacent(X1, Y1));
    CHECK(g.adjacent(X1, Z1));
    CHECK(g.adjacent(Y1, Z1));
    // C_6: X0-Y0-Z2-X2-Y2-Z0-X0
    const Vertex cycle[] = {X0, Y0, Z2, X2, Y2, Z0};
    for (int i = 0; i < 6; ++i) CHECK(g.adjacent(cycle[i], cycle[(i + 1) % 6]));
    CHECK(is_nkr_partite(g, p, 3));
    CHECK(xyz_vertex_names()[Y1] == "y1");
}

TEST_CASE("three [3,3,3]-partite graphs") {
    const auto graphs = three_333_graphs();
    REQUIRE(graphs.size() == 3);
    CHECK(component_sizes(graphs[0].graph) == std::vector<std::size_t>{3, 3, 3});
    CHECK(component_sizes(graphs[1].graph) == std::vector<std::size_t>{9});
    for (Vertex v = 0; v < 9; ++v) CHECK(graphs[1].graph.degree(v) == 2);
    CHECK(component_sizes(graphs[2].graph) == std::vector<std::size_t>{3, 6});
    CHECK(graphs[2].graph == figure1_graph().graph);
    for (const auto& ng : graphs) {
        CHECK(ng.graph.size() == 9);
        CHECK(is_nkr_partite(ng.graph, ng.partition, 3));
    }
}

TEST_CASE("figure colourings") {
    const auto graphs = three_333_graphs();
    const char* names[] = {"G1", "G2", "G3"};
    for (int i = 0; i < 3; ++i) {
        const auto c = paper_colouring(names[i]);
        CHECK(c.num_colours() == 3);
        CHECK(is_valid_orthogonal_colouring(graphs[i].graph, c));
    }
    const auto g3 = colouring_to_covering(graphs[2].graph, paper_colouring("G3"));
    CHECK_FALSE(g3.partition == graphs[2].partition);

    const auto d14 = paper_colouring("D14");
    CHECK(d14.num_colours() == 4);
    CHECK(is_valid_orthogonal_colouring(double_star(14), d14));
    // The largest colour sits on four leaves in each coordinate.
    std::size_t first = 0, second = 0;
    for (Vertex v = 2; v < 14; ++v) {
        first += d14[v].first == 3;
        second += d14[v].second == 3;
    }
    CHECK(first == 4);
    CHECK(second == 4);
    CHECK(d14[0] == ColourPair{0, 0});
    CHECK(d14[1] == ColourPair{1, 1});

    CHECK_THROWS_AS(paper_colouring("G4"), InvalidInput);
}

TEST_CASE("double_star") {
    CHECK(double_star(2) == complete_graph(2));
    const auto d4 = double_star(4);
    CHECK(d4.size() == 3);
    CHECK(is_tree(d4));
    CHECK(d4.max_degree() == 2);
    const auto d14 = double_star(14);
    CHECK(d14.order() == 14);
    CHECK(d14.size() == 13);
    CHECK(d14.max_degree() == 7);
    CHECK(d14.degree(0) == 7);
    CHECK(d14.degree(1) == 7);
    CHECK(double_star_vertex_names(4) == std::vector<std::string>{"x0", "y0", "x1", "y1"});
    CHECK_THROWS_AS(double_star(5), InvalidInput);
    CHECK_THROWS_AS(double_star(0), InvalidInput);
}

TEST_CASE("subdivided_double_star") {
    const auto t = subdivided_double_star(3);
    CHECK(t.order() == 9);
    CHECK(is_tree(t));
    CHECK(t.max_degree() == 4);
    CHECK(t.degree(0) == 4);
    CHECK(t.degree(1) == 4);
    CHECK(t.degree(8) == 2);
    CHECK_FALSE(t.adjacent(0, 1));
    CHECK(subdivided_double_star(5).order() == 25);
    CHECK_THROWS_AS(subdivided_double_star(4), InvalidInput);
    CHECK_THROWS_AS(subdivided_double_star(1), InvalidInput);
}

TEST_CASE("random_nkk") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto [g, p] = random_nkk({3, 3, 3, seed});
        CHECK(is_nkr_partite(g, p, 3));
        CHECK_FALSE(nkk_violation(g, p));

        const auto [g2, p2] = random_nkk({2, 4, 4, seed});
        for (Vertex v = 0; v < 8; ++v) CHECK(g2.degree(v) == 1);

        const auto [g3, p3] = random_nkk({4, 5, 2, seed});
        CHECK(is_nkr_partite(g3, p3, 2));
    }
    CHECK(random_nkk({3, 4, 4, 9}).graph == random_nkk({3, 4, 4, 9}).graph);
    CHECK_THROWS_AS(random_nkk({3, 3, 4, 0}), InvalidInput);
}

TEST_CASE("random_tree") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto path = random_tree(36, 2, seed);
        CHECK(is_tree(path));
        CHECK(path.max_degree() <= 2);
        std::size_t ends = 0;
        for (Vertex v = 0; v < 36; ++v) ends += path.degree(v) == 1;
        CHECK(ends == 2);

        const auto t = random_tree(100, 3, seed);
        CHECK(is_tree(t));
        CHECK(t.max_degree() <= 3);
    }
    CHECK(random_tree(50, 4, 1) == random_tree(50, 4, 1));
    CHECK(random_tree(1, 0, 0).order() == 1);
    CHECK(random_tree(2, 1, 0).size() == 1);
    CHECK_THROWS_AS(random_tree(3, 1, 0), InvalidInput);
}

TEST_CASE("random_d_degenerate") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = random_d_degenerate(200, 2, 7, seed);
        const auto s = stats(g);
        CHECK(s.degeneracy <= 2);
        CHECK(s.max_degree <= 7);
        const auto small = random_d_degenerate(14, 3, 5, seed);
        CHECK(stats(small).degeneracy == brute_force_degeneracy(small));
        CHECK(brute_force_degeneracy(small) <= 3);
    }
    CHECK_THROWS_AS(random_d_degenerate(10, 3, 2, 0), InvalidInput);
}

TEST_CASE("rook_graph") {
    const auto r = rook_graph(3);
    CHECK(r.order() == 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(r.degree(v) == 4);
    CHECK(r.adjacent(0, 2));
    CHECK(r.adjacent(0, 6));
    CHECK_FALSE(r.adjacent(0, 4));
}

TEST_CASE("random_graph is seeded") {
    CHECK(random_graph(20, 0.3, 5) == random_graph(20, 0.3, 5));
    CHECK(random_graph(20, 0.0, 5).size() == 0);
    CHECK(random_graph(6, 1.0, 5) == complete_graph(6));
}
