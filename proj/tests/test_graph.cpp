#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uberhom/corpus.hpp"
#include "uberhom/graph.hpp"

using namespace uberhom;

namespace {

oracle::Adjacency adjacency(const Graph& g) {
    oracle::Adjacency a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

std::vector<Graph> small_connected_graphs() {
    std::vector<Graph> out;
    for (std::size_t m = 1; m <= 6; ++m)
        for (auto& g : all_connected_graphs(m)) out.push_back(std::move(g));
    return out;
}

}  // namespace

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
}

TEST_CASE("generators") {
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    const Graph g = grid_graph(3, 2);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 7);
    CHECK(is_triangle_free(g));
    CHECK_FALSE(is_triangle_free(complete_graph(3)));
    CHECK(one_skeleton(simplex_boundary(2)) == complete_graph(4));
}

TEST_CASE("connected domination polynomial: hand values") {
    CHECK(to_string(connected_domination_polynomial(complete_graph(3))) == "3t + 3t^2 + t^3");
    CHECK(connected_domination_polynomial(complete_graph(3)).evaluate(-1) == -1);
    // wheel with four spokes: t(1+t)^4 + 4t^2 + 4t^3 + t^4
    const auto w = connected_domination_polynomial(one_skeleton(cone_over_square()));
    CHECK(w.coefficients() == std::vector<std::int64_t>{0, 1, 8, 10, 5, 1});
    CHECK(w.evaluate(-1) == 1);
    CHECK(connected_domination_polynomial(path_graph(3)).evaluate(-1) == 0);
    CHECK_THROWS_AS(connected_domination_polynomial(Graph(2)), NotConnectedError);
    ComputeOptions small;
    small.max_vertices = 4;
    CHECK_THROWS_AS(connected_domination_polynomial(path_graph(5), small), SizeGuardExceeded);
}

TEST_CASE("connected domination polynomial matches subset enumeration") {
    for (const auto& g : small_connected_graphs()) {
        const auto expected = oracle::connected_domination(adjacency(g));
        CHECK(connected_domination_polynomial(g, {}, DominationMethod::exhaustive).coefficients() == expected);
        CHECK(connected_domination_polynomial(g, {}, DominationMethod::pruned).coefficients() == expected);
    }
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_graph(7 + uniform_below(rng, 6), 0.35, rng, true);
        CHECK(connected_domination_polynomial(g, {}, DominationMethod::pruned) ==
              connected_domination_polynomial(g, {}, DominationMethod::exhaustive));
    }
}

TEST_CASE("chordality matches the induced-cycle search") {
    for (const auto& g : small_connected_graphs()) {
        const auto r = chordality(g);
        CHECK(r.chordal == oracle::chordal(adjacency(g)));
        if (r.chordal) {
            CHECK(is_perfect_elimination_ordering(g, r.elimination_order));
        } else {
            // the certificate is an induced cycle of length >= 4
            const auto& c = r.chordless_cycle;
            REQUIRE(c.size() >= 4);
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    const bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
                    CHECK(g.adjacent(c[i], c[j]) == consecutive);
                }
        }
    }
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK(is_chordal(complete_graph(5)));
}

TEST_CASE("random chordal graphs are connected and chordal") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_connected_chordal(3 + uniform_below(rng, 8), rng);
        CHECK(is_connected(g));
        CHECK(is_chordal(g));
        CHECK(oracle::chordal(adjacency(g)));
    }
}

TEST_CASE("seeded generators are deterministic") {
    std::mt19937_64 a(99), b(99);
    CHECK(random_graph(8, 0.4, a, true) == random_graph(8, 0.4, b, true));
    CHECK(random_connected_chordal(9, a) == random_connected_chordal(9, b));
    std::mt19937_64 c(5);
    for (int i = 0; i < 1000; ++i) CHECK(uniform_below(c, 7) < 7);
}

TEST_CASE("enumeration counts") {
    const std::vector<std::size_t> trees = {1, 2, 3, 6, 11, 23};
    for (std::size_t m = 3; m <= 8; ++m) CHECK(all_trees(m).size() == trees[m - 3]);
    const std::vector<std::size_t> graphs = {1, 1, 2, 6, 21, 112};
    for (std::size_t m = 1; m <= 6; ++m) CHECK(all_connected_graphs(m).size() == graphs[m - 1]);
}
