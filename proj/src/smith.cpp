#include "uberhom/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace uberhom {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& factor) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(source, c)) != 0) m(target, c) += factor * m(source, c);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& factor) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, source)) != 0) m(r, target) += factor * m(r, source);
}

// In-place reduction of d to Smith form. Row operations are mirrored on *u and
// column operations on *v when those are given.
void reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
    const std::size_t rows = d.rows(), cols = d.cols();
    auto row_swap = [&](std::size_t a, std::size_t b) {
        swap_rows(d, a, b);
        if (u) swap_rows(*u, a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        swap_cols(d, a, b);
        if (v) swap_cols(*v, a, b);
    };
    auto row_add = [&](std::size_t t, std::size_t s, const mpz_class& f) {
        add_row(d, t, s, f);
        if (u) add_row(*u, t, s, f);
    };
    auto col_add = [&](std::size_t t, std::size_t s, const mpz_class& f) {
        add_col(d, t, s, f);
        if (v) add_col(*v, t, s, f);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry of the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (sgn(d(r, c)) != 0 && (pr == rows || mpz_cmpabs(d(r, c).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0)) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        row_swap(t, pr);
        col_swap(t, pc);

        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (sgn(d(r, t)) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
                row_add(r, t, -q);
                if (sgn(d(r, t)) != 0) {
                    row_swap(r, t);
                    done = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (sgn(d(t, c)) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
                col_add(c, t, -q);
                if (sgn(d(t, c)) != 0) {
                    col_swap(c, t);
                    done = false;
                }
            }
            if (!done) continue;
            // divisibility: pull in any entry the pivot does not divide
            for (std::size_t r = t + 1; r < rows && done; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (sgn(d(r, c)) != 0 && !mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
                        row_add(t, r, 1);
                        done = false;
                        break;
                    }
        }
        if (sgn(d(t, t)) < 0) {
            for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
            if (u)
                for (std::size_t c = 0; c < u->cols(); ++c) (*u)(t, c) = -(*u)(t, c);
        }
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    IntegerRing zz;
    SmithForm out{a, identity_matrix(zz, a.rows()), identity_matrix(zz, a.cols())};
    reduce(out.d, &out.u, &out.v);
    return out;
}

std::vector<mpz_class> elementary_divisors(const IntMatrix& a) {
    // Sparse phase: eliminate with ±1 pivots, which never grows entries of the pivot row.
    std::vector<std::map<std::size_t, mpz_class>> rows(a.rows());
    std::vector<std::set<std::size_t>> col_rows(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0) {
                rows[r].emplace(c, a(r, c));
                col_rows[c].insert(r);
            }
    std::vector<bool> alive(a.rows(), true);
    std::size_t units = 0;

    for (;;) {
        std::size_t best_r = a.rows(), best_c = 0, best_cost = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r]) continue;
            for (const auto& [c, val] : rows[r]) {
                if (mpz_cmpabs_ui(val.get_mpz_t(), 1) != 0) continue;
                const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
                if (best_r == a.rows() || cost < best_cost) {
                    best_r = r;
                    best_c = c;
                    best_cost = cost;
                }
            }
        }
        if (best_r == a.rows()) break;
        ++units;
        const mpz_class pivot = rows[best_r].at(best_c);  // ±1, its own inverse
        const std::vector<std::size_t> targets(col_rows[best_c].begin(), col_rows[best_c].end());
        for (std::size_t r : targets) {
            if (r == best_r) continue;
            const mpz_class factor = -rows[r].at(best_c) * pivot;
            for (const auto& [c, val] : rows[best_r]) {
                auto& entry = rows[r][c];
                const bool was_zero = sgn(entry) == 0;
                entry += factor * val;
                if (sgn(entry) == 0) {
                    rows[r].erase(c);
                    col_rows[c].erase(r);
                } else if (was_zero) {
                    col_rows[c].insert(r);
                }
            }
        }
        for (const auto& [c, val] : rows[best_r]) col_rows[c].erase(best_r);
        rows[best_r].clear();
        alive[best_r] = false;
    }

    // Dense phase on what is left.
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (alive[r] && !rows[r].empty()) live_rows.push_back(r);
    for (std::size_t c = 0; c < col_rows.size(); ++c)
        if (!col_rows[c].empty()) live_cols.push_back(c);
    std::vector<mpz_class> out(units, mpz_class(1));
    if (!live_rows.empty()) {
        IntMatrix rest(live_rows.size(), live_cols.size(), mpz_class(0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (std::size_t j = 0; j < live_cols.size(); ++j) {
                auto it = rows[live_rows[i]].find(live_cols[j]);
                if (it != rows[live_rows[i]].end()) rest(i, j) = it->second;
            }
        reduce(rest, nullptr, nullptr);
        for (std::size_t t = 0; t < std::min(rest.rows(), rest.cols()); ++t)
            if (sgn(rest(t, t)) != 0) out.push_back(rest(t, t));
    }
    return out;
}

mpz_class determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && sgn(m(swap, k)) == 0) ++swap;
            if (swap == n) return 0;
            swap_rows(m, k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace uberhom
