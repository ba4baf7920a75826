#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uberhom/smith.hpp"

using namespace uberhom;

namespace {

IntMatrix random_int(std::size_t r, std::size_t c, std::mt19937_64& rng, int range) {
    IntMatrix m(r, c, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
    return m;
}

std::vector<std::vector<mpz_class>> rows_of(const IntMatrix& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

}  // namespace

TEST_CASE("Smith form factors the matrix and matches determinantal divisors") {
    std::mt19937_64 rng(5);
    IntegerRing z;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const IntMatrix a = random_int(r, c, rng, 6);
        const auto snf = smith_normal_form(a);
        CHECK(multiply(z, multiply(z, snf.u, a), snf.v) == snf.d);
        CHECK((determinant(snf.u) == 1 || determinant(snf.u) == -1));
        CHECK((determinant(snf.v) == 1 || determinant(snf.v) == -1));
        const auto expected = oracle::elementary_divisors(rows_of(a));
        std::vector<mpz_class> diag;
        for (std::size_t i = 0; i < std::min(r, c); ++i)
            if (snf.d(i, i) != 0) diag.push_back(snf.d(i, i));
        CHECK(diag == expected);
        CHECK(elementary_divisors(a) == expected);
    }
}

TEST_CASE("sparse unit-pivot path agrees on sign matrices") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = random_int(1 + rng() % 5, 1 + rng() % 5, rng, 1);
        CHECK(elementary_divisors(a) == oracle::elementary_divisors(rows_of(a)));
    }
}

TEST_CASE("determinant by Bareiss matches cofactor expansion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        IntMatrix a = random_int(n, n, rng, 9);
        CHECK(determinant(a) == oracle::det_cofactor(rows_of(a)));
    }
}

TEST_CASE("known torsion: diag(2, 4) and [[2, 4], [6, 8]]") {
    IntMatrix a(2, 2, 0);
    a(0, 0) = 2; a(1, 1) = 4;
    CHECK(elementary_divisors(a) == std::vector<mpz_class>{2, 4});
    a(0, 0) = 2; a(0, 1) = 4; a(1, 0) = 6; a(1, 1) = 8;
    CHECK(elementary_divisors(a) == std::vector<mpz_class>{2, 4});
}
