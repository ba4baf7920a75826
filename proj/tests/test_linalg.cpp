#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uberhom/field.hpp"
#include "uberhom/linalg.hpp"

using namespace uberhom;

namespace {

template <Field F>
Matrix<typename F::value_type> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int range) {
    auto m = zero_matrix(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = f.from_int(static_cast<long>(rng() % static_cast<unsigned>(2 * range + 1)) - range);
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.mul(f.inv(3), 3) == 1);
    CHECK(f.neg(0) == 0);
    CHECK(f.from_int(-1) == 6);
    CHECK_THROWS_AS(PrimeField(9), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);
}

TEST_CASE("coefficient parsing") {
    CHECK(coefficient_name(parse_coefficients("z2")) == "Z2");
    CHECK(coefficient_name(parse_coefficients("q")) == "Q");
    CHECK(coefficient_name(parse_coefficients("z")) == "Z");
    CHECK(std::get<PrimeField>(parse_coefficients("p:5")).characteristic() == 5);
    CHECK_THROWS_AS(parse_coefficients("p:6"), InputError);
    CHECK_THROWS_AS(parse_coefficients("r"), InputError);
}

TEST_CASE("rank over Z2 matches bitset elimination") {
    std::mt19937_64 rng(11);
    PrimeField f(2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        auto m = random_matrix(f, r, c, rng, 1);
        std::vector<oracle::Bits> cols;
        for (std::size_t j = 0; j < c; ++j) {
            auto b = oracle::make_bits(r);
            for (std::size_t i = 0; i < r; ++i)
                if (m(i, j)) oracle::flip(b, i);
            cols.push_back(b);
        }
        CHECK(rank(f, m) == oracle::gf2_rank(cols, r));
    }
}

TEST_CASE("rank over Q matches fraction elimination; kernel and solve are consistent") {
    std::mt19937_64 rng(12);
    RationalField q;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
        auto m = random_matrix(q, r, c, rng, 2);
        std::vector<std::vector<mpq_class>> rows(r, std::vector<mpq_class>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) rows[i][j] = m(i, j);
        const auto rk = rank(q, m);
        CHECK(rk == oracle::q_rank(rows));
        const auto ker = kernel(q, m);
        CHECK(ker.size() + rk == c);
        for (const auto& v : ker) CHECK(is_zero_vector(q, apply(q, m, v)));
        Vector<mpq_class> x(c);
        for (auto& e : x) e = static_cast<long>(rng() % 5) - 2;
        const auto b = apply(q, m, x);
        auto sol = solve(q, m, b);
        REQUIRE(sol);
        CHECK(apply(q, m, *sol) == b);
    }
}

TEST_CASE("echelon basis reports relations and expressions") {
    PrimeField f(5);
    EchelonBasis<PrimeField> e(f, 3);
    CHECK_FALSE(e.insert({1, 2, 0}));
    CHECK_FALSE(e.insert({0, 1, 1}));
    CHECK_FALSE(e.insert({2, 0, 3}));  // determinant 2 mod 5
    auto dep = e.insert({3, 1, 4});
    REQUIRE(dep);
    Vector<std::uint32_t> sum(3, 0);
    const std::vector<Vector<std::uint32_t>> gens = {{1, 2, 0}, {0, 1, 1}, {2, 0, 3}};
    for (std::size_t i = 0; i < 3; ++i) axpy(f, sum, (*dep)[i], gens[i]);
    CHECK(sum == Vector<std::uint32_t>{3, 1, 4});
    auto ex = e.express({1, 1, 1});
    REQUIRE(ex);
    CHECK(ex->size() == 4);
    CHECK((*ex)[3] == 0);
}

TEST_CASE("matrix multiply against hand values") {
    IntegerRing z;
    auto a = zero_matrix(z, 2, 2);
    a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
    auto p = multiply(z, a, a);
    CHECK(p(0, 0) == 7);
    CHECK(p(0, 1) == 10);
    CHECK(p(1, 0) == 15);
    CHECK(p(1, 1) == 22);
}
