#pragma once

// Brute-force reference computations for the tests. None of these use the
// library's linear algebra, simplex tables or enumeration code.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "uberhom/mvss.hpp"

namespace oracle {

using Bits = std::vector<std::uint64_t>;

inline Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
inline bool get(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
inline void flip(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }
inline void xor_into(Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}
inline bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

/// Rank over GF(2) of a family of vectors of length n.
inline std::size_t gf2_rank(std::vector<Bits> v, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < v.size(); ++col) {
        std::size_t piv = r;
        while (piv < v.size() && !get(v[piv], col)) ++piv;
        if (piv == v.size()) continue;
        std::swap(v[piv], v[r]);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != r && get(v[i], col)) xor_into(v[i], v[r]);
        ++r;
    }
    return r;
}

/// Kernel of the map sending basis vector k to images[k] (length n); result
/// vectors have length images.size().
inline std::vector<Bits> gf2_kernel(const std::vector<Bits>& images, std::size_t n) {
    const std::size_t d = images.size();
    std::vector<std::pair<Bits, Bits>> rows;
    for (std::size_t k = 0; k < d; ++k) {
        Bits tag = make_bits(d);
        flip(tag, k);
        rows.emplace_back(images[k], tag);
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !get(rows[piv].first, col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && get(rows[i].first, col)) {
                xor_into(rows[i].first, rows[r].first);
                xor_into(rows[i].second, rows[r].second);
            }
        ++r;
    }
    std::vector<Bits> out;
    for (std::size_t i = r; i < rows.size(); ++i) out.push_back(rows[i].second);
    return out;
}

/// Every non-empty vertex set contained in some facet, listed by size.
inline std::vector<std::vector<std::uint64_t>> simplices_by_dim(std::size_t m,
                                                                const std::vector<std::vector<unsigned>>& facets) {
    std::vector<std::uint64_t> fmasks;
    for (const auto& f : facets) {
        std::uint64_t b = 0;
        for (unsigned v : f) b |= std::uint64_t{1} << v;
        fmasks.push_back(b);
    }
    for (unsigned v = 0; v < m; ++v) fmasks.push_back(std::uint64_t{1} << v);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        bool in = false;
        for (auto f : fmasks) in = in || (s & ~f) == 0;
        if (!in) continue;
        const auto d = static_cast<std::size_t>(std::popcount(s) - 1);
        if (out.size() <= d) out.resize(d + 1);
        out[d].push_back(s);
    }
    return out;
}

/// Z2 Betti numbers of the complex spanned by the facets.
inline std::vector<std::size_t> betti_z2(std::size_t m, const std::vector<std::vector<unsigned>>& facets) {
    const auto s = simplices_by_dim(m, facets);
    std::vector<std::size_t> rk(s.size() + 1, 0);  // rk[n] = rank of d_n : C_n -> C_{n-1}
    for (std::size_t n = 1; n < s.size(); ++n) {
        std::map<std::uint64_t, std::size_t> index;
        for (std::size_t k = 0; k < s[n - 1].size(); ++k) index[s[n - 1][k]] = k;
        std::vector<Bits> cols;
        for (auto sigma : s[n]) {
            Bits b = make_bits(s[n - 1].size());
            for (auto rest = sigma; rest; rest &= rest - 1) flip(b, index[sigma & ~(rest & -rest)]);
            cols.push_back(b);
        }
        rk[n] = gf2_rank(cols, s[n - 1].size());
    }
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < s.size(); ++n) out.push_back(s[n].size() - rk[n] - rk[n + 1]);
    return out;
}

/// Rank over Q by plain fraction elimination.
inline std::size_t q_rank(std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

inline mpz_class det_cofactor(const std::vector<std::vector<mpz_class>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpz_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<mpz_class> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        const mpz_class term = a[0][c] * det_cofactor(minor);
        total += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1U) v.push_back(i);
        out.push_back(v);
    }
    return out;
}

/// Nonzero elementary divisors from determinantal divisors: d_k = D_k / D_{k-1}
/// with D_k the gcd of all k x k minors. Meant for tiny matrices.
inline std::vector<mpz_class> elementary_divisors(const std::vector<std::vector<mpz_class>>& a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        mpz_class g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                std::vector<std::vector<mpz_class>> m;
                for (auto r : rs) {
                    std::vector<mpz_class> row;
                    for (auto c : cs) row.push_back(a[r][c]);
                    m.push_back(row);
                }
                mpz_class d = det_cofactor(m);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Adjacency lists as an n x n boolean matrix.
using Adjacency = std::vector<std::vector<bool>>;

inline bool induced_connected(const Adjacency& adj, std::uint64_t s) {
    if (s == 0) return false;
    std::uint64_t seen = s & -s, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if ((frontier >> v) & 1U)
                for (std::size_t u = 0; u < adj.size(); ++u)
                    if (adj[v][u] && ((s >> u) & 1U) && !((seen >> u) & 1U)) next |= std::uint64_t{1} << u;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

/// Coefficients of D_c by checking every subset.
inline std::vector<std::int64_t> connected_domination(const Adjacency& adj) {
    const std::size_t n = adj.size();
    std::vector<std::int64_t> c(n + 1, 0);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        bool dominating = true;
        for (std::size_t v = 0; v < n && dominating; ++v) {
            if ((s >> v) & 1U) continue;
            bool hit = false;
            for (std::size_t u = 0; u < n; ++u) hit = hit || (adj[v][u] && ((s >> u) & 1U));
            dominating = hit;
        }
        if (dominating && induced_connected(adj, s)) ++c[static_cast<std::size_t>(std::popcount(s))];
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

/// No induced cycle of length >= 4.
inline bool chordal(const Adjacency& adj) {
    const std::size_t n = adj.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) < 4 || !induced_connected(adj, s)) continue;
        bool cycle = true;
        for (std::size_t v = 0; v < n && cycle; ++v) {
            if (!((s >> v) & 1U)) continue;
            int deg = 0;
            for (std::size_t u = 0; u < n; ++u) deg += adj[v][u] && ((s >> u) & 1U);
            cycle = deg == 2;
        }
        if (cycle) return false;
    }
    return true;
}

/// dim E^r_{p,q} over Z2 straight from the column filtration of the total
/// complex: E^r_p = Z^r_p / (Z^{r-1}_{p-1} + D Z^{r-1}_{p+r-1}), where
/// Z^r_p = {x in F_p : D x in F_{p-r}}.
class FilteredComplex {
public:
    explicit FilteredComplex(const uberhom::DoubleComplex<uberhom::PrimeField>& dc) : dc_(dc) {}

    std::size_t page_dim(int r, int p, int q) const {
        const int n = p + q;
        const auto z = cycles(r, p, n);
        std::vector<Bits> denom = cycles(r - 1, p - 1, n);
        for (const auto& y : cycles(r - 1, p + r - 1, n + 1)) denom.push_back(apply(y, n + 1));
        const std::size_t len = total_dim(n);
        std::vector<Bits> both = denom;
        both.insert(both.end(), z.begin(), z.end());
        return gf2_rank(both, len) - gf2_rank(denom, len);
    }

private:
    // Tot_n is ordered by column p ascending, each column in E0 order.
    std::size_t offset(int p, int n) const {
        std::size_t o = 0;
        for (int c = dc_.p_min(); c < p; ++c) o += dc_.dim(c, n - c);
        return o;
    }
    std::size_t total_dim(int n) const { return offset(dc_.p_max() + 1, n); }

    Bits apply(const Bits& x, int n) const {
        Bits out = make_bits(total_dim(n - 1));
        for (int p = dc_.p_min(); p <= dc_.p_max(); ++p) {
            const int q = n - p;
            const std::size_t d = dc_.dim(p, q);
            if (d == 0) continue;
            std::vector<std::uint32_t> part(d);
            for (std::size_t k = 0; k < d; ++k) part[k] = get(x, offset(p, n) + k);
            const auto h = dc_.horizontal(p, q, part);
            for (std::size_t k = 0; k < h.size(); ++k)
                if (h[k]) flip(out, offset(p - 1, n - 1) + k);
            const auto v = dc_.vertical(p, q, part);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k]) flip(out, offset(p, n - 1) + k);
        }
        return out;
    }

    // basis of Z^r_p in degree n, as vectors of Tot_n
    std::vector<Bits> cycles(int r, int p, int n) const {
        const std::size_t len = total_dim(n);
        const std::size_t top = offset(std::min(p, dc_.p_max()) + 1, n);
        if (p < dc_.p_min()) return {};
        std::vector<Bits> images;
        const std::size_t low = offset(std::max(p - r, dc_.p_min() - 1) + 1, n - 1);
        const std::size_t out_len = total_dim(n - 1);
        for (std::size_t k = 0; k < top; ++k) {
            Bits e = make_bits(len);
            flip(e, k);
            const Bits dx = apply(e, n);
            Bits high = make_bits(out_len);
            for (std::size_t i = low; i < out_len; ++i)
                if (get(dx, i)) flip(high, i);
            images.push_back(high);
        }
        std::vector<Bits> out;
        for (const auto& kv : gf2_kernel(images, out_len)) {
            Bits x = make_bits(len);
            for (std::size_t k = 0; k < top; ++k)
                if (get(kv, k)) flip(x, k);
            out.push_back(x);
        }
        return out;
    }

    const uberhom::DoubleComplex<uberhom::PrimeField>& dc_;
};

}  // namespace oracle
