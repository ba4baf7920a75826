#include <atomic>
#include <sstream>

#include "uberhom/chain_complex.hpp"

namespace uberhom {

std::string to_string(const AbelianGroup& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << "Z";
        if (g.free_rank > 1) os << '^' << g.free_rank;
        first = false;
    }
    for (const auto& t : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

AbelianGroup integral_homology(const ChainComplex<IntegerRing>& c, int n) {
    const auto out_divisors = elementary_divisors(c.boundary(n));
    const auto in_divisors = elementary_divisors(c.boundary(n + 1));
    AbelianGroup g;
    g.free_rank = c.rank(n) - out_divisors.size() - in_divisors.size();
    for (const auto& d : in_divisors)
        if (d > 1) g.torsion.push_back(d);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

std::vector<AbelianGroup> simplicial_homology(const SimplexTable& table, const Coefficients& coeff, bool reduced) {
    return std::visit(
        [&](const auto& ring) {
            using R = std::decay_t<decltype(ring)>;
            const auto c = simplicial_chain_complex(table, ring, reduced);
            std::vector<AbelianGroup> out;
            if constexpr (std::is_same_v<R, IntegerRing>) {
                for (int n = c.bottom(); n <= c.top(); ++n) out.push_back(integral_homology(c, n));
            } else {
                for (auto b : betti_numbers(c)) out.push_back(AbelianGroup{b, {}});
            }
            return out;
        },
        coeff);
}

std::vector<AbelianGroup> simplicial_homology(const SimplicialComplex& x, const Coefficients& coeff, bool reduced) {
    return simplicial_homology(x.table(), coeff, reduced);
}

namespace {

template <Field F>
bool acyclic_from(const SimplexTable& table, const F& field, int d) {
    const auto c = simplicial_chain_complex(table, field, true);
    for (int n = std::max(d, 0); n <= c.top(); ++n)
        if (betti_number(c, n) != 0) return false;
    return true;
}

bool leray_over_subsets(const SimplicialComplex& x, int d, const ComputeOptions& opts, bool include_full) {
    opts.check(x.vertex_count(), kDefaultPosetGuard);
    const std::size_t subsets = std::size_t{1} << x.vertex_count();
    const std::size_t count = include_full ? subsets : subsets - 1;
    std::atomic<bool> ok{true};
    parallel_for(count, opts.jobs, [&](std::size_t s) {
        if (!ok) return;
        const SimplexTable sub = x.table().restrict_to(static_cast<VertexMask>(s));
        if (sub.dimension() < d) return;
        if (!acyclic_from(sub, PrimeField(2), d) || !acyclic_from(sub, RationalField{}, d)) ok = false;
    });
    return ok;
}

}  // namespace

bool is_d_leray(const SimplicialComplex& x, int d, const ComputeOptions& opts) {
    return leray_over_subsets(x, d, opts, true);
}

bool anti_star_cover_is_d_leray(const SimplicialComplex& x, int d, const ComputeOptions& opts) {
    return leray_over_subsets(x, d, opts, false);
}

}  // namespace uberhom
