#pragma once

#include <gmpxx.h>

#include <vector>

#include "uberhom/linalg.hpp"

namespace uberhom {

using IntMatrix = Matrix<mpz_class>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal of the Smith normal form, in divisibility order. Uses sparse
/// unit-pivot elimination first, so it is much cheaper than smith_normal_form on
/// the sparse ±1 matrices that occur as coboundaries.
std::vector<mpz_class> elementary_divisors(const IntMatrix& a);

/// Exact determinant (Bareiss fraction-free elimination).
mpz_class determinant(const IntMatrix& a);

}  // namespace uberhom
