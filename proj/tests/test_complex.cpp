#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "uberhom/chain_complex.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/corpus.hpp"
#include "uberhom/graph.hpp"

using namespace uberhom;

TEST_CASE("simplices are ordered by size, then lexicographically") {
    const auto x = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    REQUIRE(x.count(0) == 4);
    REQUIRE(x.count(1) == 4);
    REQUIRE(x.count(2) == 1);
    const std::vector<Simplex> edges = x.simplices(1);
    CHECK(edges[0].vertices() == std::vector<VertexId>{0, 1});
    CHECK(edges[1].vertices() == std::vector<VertexId>{0, 2});
    CHECK(edges[2].vertices() == std::vector<VertexId>{1, 2});
    CHECK(edges[3].vertices() == std::vector<VertexId>{2, 3});
    CHECK(x.facets().size() == 2);
}

TEST_CASE("malformed facets are rejected") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Simplex::from_vertices(std::vector<VertexId>{64}), InputError);
}

TEST_CASE("a vertex with no facets is still a 0-simplex") {
    const auto x = SimplicialComplex::from_facets(1, {});
    CHECK(x.vertex_count() == 1);
    CHECK(x.count(0) == 1);
    CHECK(x.dimension() == 0);
}

TEST_CASE("anti-star equals the induced subcomplex on the other vertices") {
    for (const auto& c : standard_corpus(10, 3)) {
        const auto& x = c.complex;
        for (VertexId v = 0; v < x.vertex_count(); ++v) {
            const auto a = anti_star(x, v);
            const auto i = induced_subcomplex(x, x.vertex_mask() & ~(VertexMask{1} << v));
            CHECK(a == i);
        }
    }
    CHECK_THROWS_AS(anti_star(standard_simplex(2), 0), StandardSimplexError);
}

TEST_CASE("anti-star cover preconditions") {
    CHECK_THROWS_AS(anti_star_cover(standard_simplex(3)), StandardSimplexError);
    const auto two_points = SimplicialComplex::from_facets(3, {{0, 1}});
    CHECK_THROWS_AS(anti_star_cover(two_points), NotConnectedError);
}

TEST_CASE("nerve of the anti-star cover is the boundary of the simplex on the vertices") {
    for (const auto& c : standard_corpus(10, 4)) {
        const auto& x = c.complex;
        const auto n = nerve(anti_star_cover(x));
        CHECK(n == simplex_boundary(x.vertex_count() - 2));
    }
}

TEST_CASE("boundary triangle: pairwise anti-star intersections are single vertices") {
    const auto x = simplex_boundary(1);
    const Cover c = anti_star_cover(x);
    const std::vector<std::size_t> j01 = {0, 1};
    const auto u = cover_intersection(c, j01);
    CHECK(u.vertex_count() == 1);
    CHECK(u.original_ids() == std::vector<VertexId>{2});
}

TEST_CASE("covers must be subcomplexes whose union is the whole complex") {
    const auto x = graph_complex(path_graph(3));
    const SimplexTable e0(std::vector<Simplex>{Simplex(0b001), Simplex(0b010), Simplex(0b011)});
    const SimplexTable e1(std::vector<Simplex>{Simplex(0b010), Simplex(0b100), Simplex(0b110)});
    CHECK_NOTHROW(Cover(x, {e0, e1}));
    CHECK_THROWS_AS(Cover(x, {e0}), CoverError);
    const SimplexTable bad(std::vector<Simplex>{Simplex(0b001), Simplex(0b100), Simplex(0b101)});
    CHECK_THROWS_AS(Cover(x, {e0, e1, bad}), CoverError);
}

TEST_CASE("cone, suspension and Euler characteristics") {
    for (const auto& c : standard_corpus(10, 5)) {
        const auto& x = c.complex;
        CHECK(euler_characteristic(cone(x)) == 1);
        CHECK(euler_characteristic(suspension(x)) == 2 - euler_characteristic(x));
        // reduced homology shifts up by one under suspension
        for (const auto& coeff : {Coefficients{RationalField{}}, Coefficients{PrimeField(2)}}) {
            const auto h = simplicial_homology(x, coeff, true);
            const auto s = simplicial_homology(suspension(x), coeff, true);
            for (std::size_t q = 1; q < s.size(); ++q)
                CHECK(s[q].free_rank == (q - 1 < h.size() ? h[q - 1].free_rank : 0));
        }
    }
    CHECK(cone(graph_complex(cycle_graph(4))).vertex_count() == 5);
    CHECK(suspension(standard_simplex(1)).count(2) == 2);
}

TEST_CASE("link of a vertex in the octahedron is a 4-cycle") {
    const auto oct = suspension(graph_complex(cycle_graph(4)));
    const auto l = link(oct, Simplex(VertexMask{1} << 4));
    CHECK(l.vertex_count() == 4);
    CHECK(l.count(1) == 4);
    CHECK(l.dimension() == 1);
}

TEST_CASE("flag complex of K4 is the tetrahedron; skeleton truncates") {
    CHECK(is_standard_simplex(flag_complex(complete_graph(4))));
    CHECK(skeleton(standard_simplex(3), 1) == graph_complex(complete_graph(4)));
    CHECK(flag_complex(cycle_graph(4)).dimension() == 1);
}

TEST_CASE("spheres and simplices") {
    CHECK(simplex_boundary(2).vertex_count() == 4);
    CHECK(simplex_boundary(2).dimension() == 2);
    CHECK(euler_characteristic(simplex_boundary(2)) == 2);
    CHECK(euler_characteristic(simplex_boundary(3)) == 0);
    CHECK(is_standard_simplex(standard_simplex(4)));
    CHECK_FALSE(is_standard_simplex(simplex_boundary(3)));
}

TEST_CASE("labels survive induced subcomplexes") {
    const auto x = graph_complex(path_graph(3)).with_labels({"a", "b", "c"});
    const auto y = induced_subcomplex(x, VertexMask{0b110});
    CHECK(y.labels() == std::vector<std::string>{"b", "c"});
    CHECK(y.original_ids() == std::vector<VertexId>{1, 2});
}

TEST_CASE("star covers of flag complexes of trees are good") {
    for (const auto& t : all_trees(6)) CHECK(is_good_cover(star_cover(flag_complex(t))));
    CHECK_FALSE(is_good_cover(star_cover(graph_complex(cycle_graph(3)))));
}
