#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graph_helpers.hpp"
#include "orthocover/builders.hpp"
#include "orthocover/oracle.hpp"
#include "orthocover/search.hpp"

using namespace orthocover;
using namespace orthocover::testing;

namespace {

enum : Vertex { X0, X1, X2, Y0, Y1, Y2, Z0, Z1, Z2 };

SearchOutcome<OrthogonalColouring> colour(const Graph& g, std::size_t n, std::uint64_t budget = default_budget) {
    SearchBudget b(budget);
    return find_orthogonal_colouring(g, n, b);
}

std::size_t ochi_value(const Graph& g) {
    SearchBudget b(default_budget);
    auto r = ochi(g, b);
    REQUIRE(r.found());
    CHECK(is_valid_orthogonal_colouring(g, r.witness->witness));
    CHECK(r.witness->witness.num_colours() == r.witness->value);
    return r.witness->value;
}

}  // namespace

TEST_CASE("find_orthogonal_colouring examples") {
    auto d14 = colour(double_star(14), 4);
    REQUIRE(d14.found());
    CHECK(is_valid_orthogonal_colouring(double_star(14), *d14.witness));

    CHECK(colour(subdivided_double_star(3), 3, 10'000'000).status == SearchStatus::ProvedNone);
    CHECK(colour(path_graph(4), 2).status == SearchStatus::ProvedNone);
    CHECK_FALSE(oracle::orthogonal_colouring_exists_naive(path_graph(4), 2));

    // n > N^2 is refuted by counting alone.
    auto counted = colour(empty_graph(10), 3);
    CHECK(counted.status == SearchStatus::ProvedNone);

    auto first = colour(complete_graph(4), 4);
    REQUIRE(first.found());
    CHECK((*first.witness)[0] == ColourPair{0, 0});
}

TEST_CASE("a budget below the proof size gives inconclusive, never a false refutation") {
    auto r = colour(subdivided_double_star(3), 3, 2);
    CHECK(r.status == SearchStatus::Inconclusive);
    CHECK(r.nodes_used <= 2);
    CHECK_THROWS_AS(colour(empty_graph(3), 65), InvalidInput);
}

TEST_CASE("ochi examples") {
    for (const auto& ng : three_333_graphs()) CHECK(ochi_value(ng.graph) == 3);
    CHECK(ochi_value(subdivided_double_star(3)) == 4);
    CHECK(ochi_value(double_star(8)) == 4);
    CHECK(ochi_value(double_star(4)) == 3);
    CHECK(ochi_value(double_star(16)) == 5);
    CHECK(ochi_value(empty_graph(1)) == 1);
    CHECK(ochi_value(complete_graph(5)) == 5);
    SearchBudget b(10);
    auto none = ochi(Graph(0), b);
    REQUIRE(none.found());
    CHECK(none.witness->value == 0);
}

TEST_CASE("find_independent_covering examples") {
    const auto [g, p] = figure1_graph();
    SearchBudget b(1'000'000);
    auto r = find_independent_covering(g, p, b);
    CHECK(r.status == SearchStatus::ProvedNone);
    CHECK(r.nodes_used < 1'000'000);
    CHECK_FALSE(oracle::independent_covering_exists_naive(g, p));

    const auto g1 = three_333_graphs()[0];
    SearchBudget b1(default_budget);
    auto found = find_independent_covering(g1.graph, g1.partition, b1);
    REQUIRE(found.found());
    CHECK(is_independent_covering(g1.graph, g1.partition, *found.witness));

    const Partition rows(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    SearchBudget b2(default_budget);
    auto trivial = find_independent_covering(empty_graph(9), rows, b2);
    REQUIRE(trivial.found());
    CHECK(is_independent_covering(empty_graph(9), rows, *trivial.witness));

    SearchBudget b3(default_budget);
    CHECK_THROWS_AS(find_independent_covering(complete_graph(4), Partition(4, {{0, 1}, {2, 3}}), b3), InvalidInput);
    CHECK_THROWS_AS(find_independent_covering(empty_graph(3), Partition(3, {{0, 1}, {2}}), b3), InvalidInput);

    SearchBudget tiny(10);
    CHECK(find_independent_covering(g, p, tiny).status == SearchStatus::Inconclusive);
}

TEST_CASE("covering search agrees with exhaustive assignment") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t parts = 2 + seed % 3;
        const std::size_t k = 2 + seed % 2;
        const std::size_t r = 1 + seed % k;
        const auto [g, p] = random_nkk({parts, k, r, seed});
        SearchBudget b(default_budget);
        auto out = find_independent_covering(g, p, b);
        REQUIRE(out.status != SearchStatus::Inconclusive);
        CHECK(out.found() == oracle::independent_covering_exists_naive(g, p));
        if (out.found()) CHECK(is_independent_covering(g, p, *out.witness));
    }
}

TEST_CASE("perfect_orthogonal_check") {
    SearchBudget b(default_budget);
    CHECK(perfect_orthogonal_check(rook_graph(3), b));
    SearchBudget b2(default_budget);
    CHECK_FALSE(perfect_orthogonal_check(subdivided_double_star(3), b2));
    SearchBudget b3(default_budget);
    CHECK(perfect_orthogonal_check(empty_graph(9), b3));
    SearchBudget b4(default_budget);
    CHECK_THROWS_AS(perfect_orthogonal_check(empty_graph(8), b4), InvalidInput);
    SearchBudget tiny(3);
    CHECK_THROWS_AS(perfect_orthogonal_check(subdivided_double_star(3), tiny), BudgetExhausted);
}

TEST_CASE("search agrees with the factored oracle on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const auto g = random_graph(n, 0.15 * static_cast<double>(1 + rng() % 5), rng());
        for (std::size_t colours = 1; colours <= 4; ++colours) {
            auto r = colour(g, colours);
            REQUIRE(r.status != SearchStatus::Inconclusive);
            CHECK(r.found() == oracle::orthogonal_colouring_exists(g, colours));
            if (r.found()) CHECK(is_valid_orthogonal_colouring(g, *r.witness));
        }
    }
}

TEST_CASE("symmetry breaking does not change the answer on relabelled graphs") {
    // Permuting vertex ids moves which vertex is pinned to (0,0) and the branching order.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + rng() % 6;
        const auto g = random_graph(n, 0.35, rng());
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabelled;
        for (const auto& e : g.edges()) relabelled.push_back({perm[e.u], perm[e.v]});
        const Graph h(n, relabelled);
        for (std::size_t colours = 2; colours <= 4; ++colours)
            CHECK(colour(g, colours).found() == colour(h, colours).found());
    }
}

TEST_CASE("propagation replays the three hand cases") {
    const auto [g, p] = figure1_graph();
    const auto names = xyz_vertex_names();
    auto fix = [&](Vertex y, Vertex z) {
        std::vector<std::optional<std::size_t>> fixed(9);
        fixed[X0] = fixed[y] = fixed[z] = 0;
        fixed[X1] = 1;
        fixed[X2] = 2;
        return propagate_transversals(g, p, fixed, names);
    };
    auto contains = [](const TransversalPropagation& r, const std::string& step) {
        return std::find(r.trace.begin(), r.trace.end(), step) != r.trace.end();
    };

    auto case1 = fix(Y1, Z2);
    CHECK(contains(case1, "y2 -> T1"));
    CHECK(case1.contradiction);

    auto case2 = fix(Y2, Z1);
    CHECK(contains(case2, "y1 -> T2"));
    CHECK(contains(case2, "y0 -> T1"));
    CHECK(case2.contradiction);

    auto case3 = fix(Y2, Z2);
    CHECK(contains(case3, "y1 -> T2"));
    CHECK(case3.contradiction);

    // Without any fixed vertex nothing is deduced.
    auto free_run = propagate_transversals(g, p, std::vector<std::optional<std::size_t>>(9), names);
    CHECK(free_run.trace.empty());
    CHECK_FALSE(free_run.contradiction);
}
