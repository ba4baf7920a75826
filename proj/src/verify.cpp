#include "uberhom/verify.hpp"

#include <algorithm>
#include <set>

#include "uberhom/chain_complex.hpp"

namespace uberhom {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "PASS";
        case Outcome::fail: return "FAIL";
        case Outcome::skip: return "SKIP";
    }
    return "?";
}

void Report::settle() {
    if (outcome == Outcome::skip) return;
    outcome = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; }) ? Outcome::pass
                                                                                             : Outcome::fail;
}

namespace {

const std::vector<std::pair<Theorem, std::string>> kTheorems = {
    {Theorem::identification, "identification"}, {Theorem::abutment, "abutment"},
    {Theorem::euler, "euler"},                   {Theorem::cone, "cone"},
    {Theorem::suspension, "suspension"},         {Theorem::trianglefree, "trianglefree"},
    {Theorem::categorification, "categorification"},
};

void compare(Report& r, std::string label, long expected, long actual) {
    r.checks.push_back({std::move(label), std::to_string(expected), std::to_string(actual), expected == actual});
}

std::string bideg(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Report skipped(std::string theorem, std::string reason) {
    Report r;
    r.theorem = std::move(theorem);
    r.outcome = Outcome::skip;
    r.reason = std::move(reason);
    return r;
}

template <Field F>
void identification_checks(Report& r, const SimplicialComplex& x, const F& field, const BigradedDims& b,
                           const ComputeOptions& opts) {
    const auto ss = anti_star_spectral_sequence(x, field, true, opts);
    const auto& e2 = ss.page(2);
    const int m = static_cast<int>(x.vertex_count());
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= x.dimension(); ++i) {
            const int p = m - j - 1;
            compare(r, "E2" + bideg(p, i) + " vs B^" + std::to_string(j) + "_" + std::to_string(i),
                    static_cast<long>(b.at(j, i)), static_cast<long>(e2.dim(p, i)));
        }
    // d2 composed with d2
    for (const auto& [src, d] : e2.differentials) {
        auto next = e2.differentials.find({src.first - 2, src.second + 1});
        if (next == e2.differentials.end() || d.cols() == 0 || next->second.rows() == 0) continue;
        const bool zero = is_zero_matrix(field, multiply(field, next->second, d));
        r.checks.push_back({"d2 d2 from E2" + bideg(src.first, src.second), "0", zero ? "0" : "nonzero", zero});
    }
}

template <Field F>
void abutment_checks(Report& r, const SimplicialComplex& x, const F& field, const ComputeOptions& opts) {
    const auto betti = simplicial_homology(x, Coefficients{field}, false);
    const auto plain = anti_star_spectral_sequence(x, field, false, opts);
    const auto& inf = plain.infinity();
    for (int n = 0; n <= x.dimension(); ++n) {
        long total = 0;
        for (int p = inf.p_min; p <= inf.p_max; ++p) total += static_cast<long>(inf.dim(p, n - p));
        compare(r, "sum E-inf total degree " + std::to_string(n), static_cast<long>(betti[n].free_rank), total);
    }
    const auto aug = anti_star_spectral_sequence(x, field, true, opts);
    const auto& ainf = aug.infinity();
    long total = 0;
    for (int p = ainf.p_min; p <= ainf.p_max; ++p)
        for (int q = 0; q <= ainf.q_max; ++q) total += static_cast<long>(ainf.dim(p, q));
    compare(r, "augmented E-inf total", 0, total);
}

bool is_complete_skeleton(const SimplicialComplex& x) {
    const std::size_t m = x.vertex_count();
    return one_skeleton(x).edge_count() == m * (m - 1) / 2;
}

}  // namespace

Theorem parse_theorem(const std::string& name) {
    for (const auto& [t, n] : kTheorems)
        if (n == name) return t;
    throw InputError("unknown theorem '" + name + "'");
}

std::string to_string(Theorem t) {
    for (const auto& [k, n] : kTheorems)
        if (k == t) return n;
    return "?";
}

std::string anti_star_hypotheses(const SimplicialComplex& x) {
    if (x.vertex_count() == 0) return "empty complex";
    if (is_standard_simplex(x)) return "complex is a standard simplex";
    if (!is_connected(x)) return "complex is not connected";
    return {};
}

template <Field F>
std::map<std::pair<int, int>, std::size_t> delta2_on_uber(const SpectralSequence<F>& ss, std::size_t vertex_count) {
    std::map<std::pair<int, int>, std::size_t> out;
    const int m = static_cast<int>(vertex_count);
    const auto& e2 = ss.page(2);
    if (e2.r != 2) return out;
    for (const auto& [src, d] : e2.differentials)
        if (d.rows() && d.cols()) out[{m - src.first - 1, src.second}] = rank(ss.double_complex().field(), d);
    return out;
}

template std::map<std::pair<int, int>, std::size_t> delta2_on_uber(const SpectralSequence<PrimeField>&, std::size_t);
template std::map<std::pair<int, int>, std::size_t> delta2_on_uber(const SpectralSequence<RationalField>&,
                                                                    std::size_t);

Report verify_identification(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts) {
    if (auto why = anti_star_hypotheses(x); !why.empty()) return skipped("identification", why);
    opts.check(x.vertex_count(), kDefaultPosetGuard);
    Report r;
    r.theorem = "identification";
    const BigradedDims b = zero_degree_uber(x, field, opts);
    std::visit([&](const auto& f) { identification_checks(r, x, f, b, opts); }, field);
    r.settle();
    return r;
}

Report verify_abutment(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts) {
    if (auto why = anti_star_hypotheses(x); !why.empty()) return skipped("abutment", why);
    Report r;
    r.theorem = "abutment";
    std::visit([&](const auto& f) { abutment_checks(r, x, f, opts); }, field);
    r.settle();
    return r;
}

Report verify_euler(const SimplicialComplex& x, const ComputeOptions& opts) {
    if (auto why = anti_star_hypotheses(x); !why.empty()) return skipped("euler", why);
    Report r;
    r.theorem = "euler";
    const long m = static_cast<long>(x.vertex_count());
    const long dc = connected_domination_polynomial(one_skeleton(x), opts).evaluate(-1);
    const long lhs = (m - 1) % 2 == 0 ? dc : -dc;
    const long rhs = euler_characteristic(x) - 1;
    r.checks.push_back({"(-1)^(m-1) D_c(-1) vs chi - 1", std::to_string(rhs), std::to_string(lhs), lhs == rhs});
    if (!anti_star_cover_is_d_leray(x, 1, opts)) {
        r.outcome = Outcome::skip;
        r.reason = "anti-star cover is not 1-Leray";
        return r;
    }
    r.settle();
    return r;
}

Report verify_cone(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts) {
    if (x.vertex_count() == 0 || is_standard_simplex(x)) return skipped("cone", "complex is a standard simplex");
    Report r;
    r.theorem = "cone";
    const auto base = zero_degree_uber(x, field, opts);
    const auto coned = zero_degree_uber(cone(x), field, opts);
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, d] : base.dims) keys.insert(k);
    for (const auto& [k, d] : coned.dims) keys.insert(k);
    for (auto [j, i] : keys)
        compare(r, "B" + bideg(j, i), static_cast<long>(base.at(j, i)), static_cast<long>(coned.at(j, i)));
    if (keys.empty()) r.reason = "both sides vanish";
    r.settle();
    return r;
}

Report verify_suspension(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts) {
    if (x.vertex_count() == 0) return skipped("suspension", "empty complex");
    Report r;
    r.theorem = "suspension";
    const int m = static_cast<int>(x.vertex_count());
    const auto base = zero_degree_uber(x, field, opts);
    const auto susp = zero_degree_uber(suspension(x), field, opts);
    const bool complete = is_complete_skeleton(x);
    for (int j = 0; j <= m + 2; ++j) {
        long expected = 0;
        if (!complete) expected = static_cast<long>(base.at(j, 0)) + (j == 2 ? 1 : 0);
        compare(r, "B" + bideg(j, 0), expected, static_cast<long>(susp.at(j, 0)));
    }
    for (int q = 2; q <= x.dimension() + 1; ++q)
        for (int j = 0; j <= m + 2; ++j)
            compare(r, "B" + bideg(j, q), static_cast<long>(base.at(j, q) + base.at(j - 2, q - 1)),
                    static_cast<long>(susp.at(j, q)));
    r.reason = complete ? "complete 1-skeleton: the q = 0 row vanishes" : "";
    r.settle();
    return r;
}

Report verify_trianglefree(const Graph& g, const ComputeOptions& opts) {
    if (g.vertex_count() == 0 || !is_connected(g)) return skipped("trianglefree", "graph is not connected");
    if (g.vertex_count() <= 2) return skipped("trianglefree", "graph complex is a standard simplex");
    if (!is_triangle_free(g)) return skipped("trianglefree", "graph has a triangle");
    Report r;
    r.theorem = "trianglefree";
    const int m = static_cast<int>(g.vertex_count());
    const auto bold = bold_homology(g, Coefficients{RationalField{}}, opts);
    const auto b = zero_degree_uber(graph_complex(g), RationalField{}, opts);
    for (int j = 0; j <= m - 2; ++j)
        compare(r, "H^" + std::to_string(j) + " vs B^" + std::to_string(j + 2) + "_1",
                static_cast<long>(b.at(j + 2, 1)), static_cast<long>(bold[static_cast<std::size_t>(j)].free_rank));
    for (int j = std::max(m - 1, 0); j <= m; ++j)
        compare(r, "H^" + std::to_string(j), 0, static_cast<long>(bold[static_cast<std::size_t>(j)].free_rank));
    r.settle();
    return r;
}

Report verify_categorification(const Graph& g, const ComputeOptions& opts) {
    if (g.vertex_count() == 0 || !is_connected(g)) return skipped("categorification", "graph is not connected");
    Report r;
    r.theorem = "categorification";
    const long chi = euler_characteristic(bold_homology(g, Coefficients{RationalField{}}, opts));
    const long dc = connected_domination_polynomial(g, opts, DominationMethod::exhaustive).evaluate(-1);
    compare(r, "chi(bold) vs D_c(-1)", dc, chi);
    r.settle();
    return r;
}

Report verify(Theorem t, const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts) {
    switch (t) {
        case Theorem::identification: return verify_identification(x, field, opts);
        case Theorem::abutment: return verify_abutment(x, field, opts);
        case Theorem::euler: return verify_euler(x, opts);
        case Theorem::cone: return verify_cone(x, field, opts);
        case Theorem::suspension: return verify_suspension(x, field, opts);
        case Theorem::trianglefree: return verify_trianglefree(one_skeleton(x), opts);
        case Theorem::categorification: return verify_categorification(one_skeleton(x), opts);
    }
    throw InputError("unknown theorem");
}

}  // namespace uberhom
