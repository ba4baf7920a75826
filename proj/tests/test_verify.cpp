#include <catch2/catch_amalgamated.hpp>

#include "uberhom/corpus.hpp"
#include "uberhom/verify.hpp"

using namespace uberhom;

namespace {

const FieldCoefficients z2{PrimeField(2)};
const FieldCoefficients q{RationalField{}};

}  // namespace

TEST_CASE("d2 between B groups") {
    using Ranks = std::map<std::pair<int, int>, std::size_t>;
    const auto tri = anti_star_spectral_sequence(simplex_boundary(1), RationalField{}, true);
    CHECK(delta2_on_uber(tri, 3) == Ranks{{{1, 0}, 1}});
    const auto square = anti_star_spectral_sequence(cone_over_square(), RationalField{}, true);
    CHECK(delta2_on_uber(square, 5) == Ranks{{{2, 0}, 1}});
}

TEST_CASE("identification holds on random complexes") {
    for (const auto& c : random_complexes(12, 51)) {
        const auto r = verify_identification(c.complex, z2);
        INFO(c.name);
        CHECK(r.outcome == Outcome::pass);
        CHECK(!r.checks.empty());
    }
    CHECK(verify_identification(standard_simplex(2), z2).outcome == Outcome::skip);
    CHECK(verify_identification(build_complex(3, {{0}, {1, 2}}), z2).outcome == Outcome::skip);
}

TEST_CASE("abutment holds on the fixed complexes") {
    for (const auto& c : fixed_complexes()) {
        INFO(c.name);
        CHECK(verify_abutment(c.complex, z2).outcome == Outcome::pass);
        CHECK(verify_abutment(c.complex, q).outcome == Outcome::pass);
    }
}

TEST_CASE("euler: holds for 1-Leray flag complexes, skipped for the square cone") {
    for (const auto& g : chordal_suite(8, 52)) {
        const auto x = flag_complex(g.graph);
        const auto r = verify_euler(x);
        INFO(g.name);
        if (is_standard_simplex(x)) CHECK(r.outcome == Outcome::skip);
        else CHECK(r.outcome == Outcome::pass);
    }
    const auto r = verify_euler(cone_over_square());
    CHECK(r.outcome == Outcome::skip);
    REQUIRE(r.checks.size() == 1);
    CHECK(!r.checks[0].ok);
    CHECK(r.checks[0].expected == "0");
    CHECK(r.checks[0].actual == "1");
}

TEST_CASE("cone and suspension") {
    for (const auto& c : fixed_complexes()) {
        INFO(c.name);
        CHECK(verify_cone(c.complex, q).outcome == Outcome::pass);
        CHECK(verify_suspension(c.complex, z2).outcome == Outcome::pass);
    }
}

TEST_CASE("triangle-free shift") {
    for (const auto& g : {cycle_graph(4), cycle_graph(5), cycle_graph(6), grid_graph(3, 2), path_graph(5)})
        CHECK(verify_trianglefree(g).outcome == Outcome::pass);
    CHECK(verify_trianglefree(complete_graph(3)).outcome == Outcome::skip);
    CHECK(verify_trianglefree(path_graph(2)).outcome == Outcome::skip);
}

TEST_CASE("categorification on small graphs") {
    for (std::size_t m = 1; m <= 5; ++m)
        for (const auto& g : all_connected_graphs(m)) CHECK(verify_categorification(g).outcome == Outcome::pass);
}

TEST_CASE("reports") {
    Report r;
    r.checks.push_back({"a", "1", "1", true});
    r.settle();
    CHECK(r.outcome == Outcome::pass);
    r.checks.push_back({"b", "1", "2", false});
    r.settle();
    CHECK(r.outcome == Outcome::fail);
    r.outcome = Outcome::skip;
    r.settle();
    CHECK(r.outcome == Outcome::skip);
    CHECK(to_string(Outcome::fail) == "FAIL");

    CHECK(parse_theorem("suspension") == Theorem::suspension);
    CHECK(to_string(Theorem::trianglefree) == "trianglefree");
    CHECK_THROWS_AS(parse_theorem("riemann"), InputError);
}
