#include "uberhom/uber.hpp"

#include <unordered_map>

namespace uberhom {

namespace {

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

std::vector<std::vector<Bicolouring>> nodes_by_level(std::size_t m) {
    std::vector<std::vector<Bicolouring>> out(m + 1);
    for (Bicolouring s = 0; s < (Bicolouring{1} << m); ++s) out[static_cast<std::size_t>(level(s))].push_back(s);
    return out;
}

// A chain on `sub` rewritten on `super`; both tables share vertex numbering.
template <Field F>
Vector<typename F::value_type> push_forward(const F& field, const Vector<typename F::value_type>& chain,
                                            const SimplexTable& sub, const SimplexTable& super, int dim) {
    Vector<typename F::value_type> out(super.count(dim), field.zero());
    const auto& simplices = sub.simplices(dim);
    for (std::size_t k = 0; k < chain.size(); ++k)
        if (!field.is_zero(chain[k])) out[*super.index_of(simplices[k])] = chain[k];
    return out;
}

}  // namespace

int cube_sign(Bicolouring from, VertexId flipped, SignConvention convention) {
    const VertexMask below = bit(flipped) - 1;
    const VertexMask chosen = convention == SignConvention::standard ? from & below : from & ~below & ~bit(flipped);
    return std::popcount(chosen) % 2 == 0 ? 1 : -1;
}

bool squares_anticommute(std::size_t m, SignConvention convention) {
    for (Bicolouring s = 0; s < (Bicolouring{1} << m); ++s)
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = u + 1; v < m; ++v) {
                if (s & (bit(u) | bit(v))) continue;
                const auto uu = static_cast<VertexId>(u), vv = static_cast<VertexId>(v);
                const int product = cube_sign(s, uu, convention) * cube_sign(s | bit(u), vv, convention) *
                                    cube_sign(s, vv, convention) * cube_sign(s | bit(v), uu, convention);
                if (product != -1) return false;
            }
    return true;
}

BigradedDims TrigradedDims::weight_zero() const {
    BigradedDims out;
    for (const auto& [key, d] : dims)
        if (std::get<1>(key) == 0) out.set(std::get<0>(key), std::get<2>(key), d);
    return out;
}

template <Field F>
CubeNodes<F>::CubeNodes(const SimplicialComplex& x, const F& field, const ComputeOptions& opts)
    : m_(x.vertex_count()), top_(x.dimension()) {
    opts.check(m_, kDefaultPosetGuard);
    const std::size_t count = std::size_t{1} << m_;
    std::vector<std::optional<Node>> built(count);
    parallel_for(count, opts.jobs, [&](std::size_t s) {
        Node node{x.table().restrict_to(static_cast<VertexMask>(s)), {}};
        const auto chains = simplicial_chain_complex(node.table, field, false);
        for (int i = 0; i <= node.table.dimension(); ++i) node.by_degree.emplace_back(chains, i);
        built[s] = std::move(node);
    });
    nodes_.reserve(count);
    for (auto& n : built) nodes_.push_back(std::move(*n));
}

template <Field F>
const HomologyBasis<F>* CubeNodes<F>::homology(Bicolouring s, int i) const {
    const auto& node = nodes_.at(s);
    if (i < 0 || i >= static_cast<int>(node.by_degree.size())) return nullptr;
    return &node.by_degree[static_cast<std::size_t>(i)];
}

template <Field F>
std::size_t CubeNodes<F>::dimension(Bicolouring s, int i) const {
    const auto* h = homology(s, i);
    return h ? h->dimension() : 0;
}

template <Field F>
CubeComplex<F> zero_degree_uber_complex(const CubeNodes<F>& nodes, const F& field, int i, const ComputeOptions& opts,
                                        SignConvention convention) {
    using T = typename F::value_type;
    const std::size_t m = nodes.vertex_count();
    const auto levels = nodes_by_level(m);
    CubeComplex<F> out{field, i, {}, {}, {}};
    std::vector<std::size_t> offset(std::size_t{1} << m, 0);
    for (const auto& lvl : levels) {
        std::size_t total = 0;
        std::vector<std::pair<Bicolouring, std::size_t>> labels;
        for (Bicolouring s : lvl) {
            offset[s] = total;
            const std::size_t d = nodes.dimension(s, i);
            for (std::size_t k = 0; k < d; ++k) labels.emplace_back(s, k);
            total += d;
        }
        out.ranks.push_back(total);
        out.basis.push_back(std::move(labels));
    }
    for (std::size_t j = 0; j < m; ++j) {
        Matrix<T> dj = zero_matrix(field, out.ranks[j + 1], out.ranks[j]);
        const auto& lvl = levels[j];
        parallel_for(lvl.size(), opts.jobs, [&](std::size_t idx) {
            const Bicolouring s = lvl[idx];
            const auto* src = nodes.homology(s, i);
            if (!src || src->dimension() == 0) return;
            for (std::size_t v = 0; v < m; ++v) {
                if (s & bit(v)) continue;
                const Bicolouring t = s | bit(v);
                const auto* dst = nodes.homology(t, i);
                const T sign = field.from_int(cube_sign(s, static_cast<VertexId>(v), convention));
                for (std::size_t c = 0; c < src->dimension(); ++c) {
                    const auto image = push_forward(field, src->representatives()[c], nodes.table(s), nodes.table(t), i);
                    auto coords = dst->coordinates(image);
                    if (!coords) throw SolveFailure("inclusion sent a cycle to a non-cycle");
                    for (std::size_t r = 0; r < coords->size(); ++r)
                        if (!field.is_zero((*coords)[r])) dj(offset[t] + r, offset[s] + c) = field.mul(sign, (*coords)[r]);
                }
            }
        });
        out.d.push_back(std::move(dj));
    }
    return out;
}

template <Field F>
std::vector<std::size_t> cochain_cohomology_dims(const F& field, const std::vector<std::size_t>& ranks,
                                                 const std::vector<Matrix<typename F::value_type>>& d) {
    std::vector<std::size_t> rk(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) rk[j] = rank(field, d[j]);
    std::vector<std::size_t> out(ranks.size());
    for (std::size_t j = 0; j < ranks.size(); ++j)
        out[j] = ranks[j] - (j < rk.size() ? rk[j] : 0) - (j > 0 && j - 1 < rk.size() ? rk[j - 1] : 0);
    return out;
}

template <Field F>
BigradedDims zero_degree_uber(const SimplicialComplex& x, const F& field, const ComputeOptions& opts,
                              SignConvention convention) {
    const CubeNodes<F> nodes(x, field, opts);
    BigradedDims out;
    for (int i = 0; i <= nodes.top_degree(); ++i) {
        const auto cube = zero_degree_uber_complex(nodes, field, i, opts, convention);
        const auto dims = cochain_cohomology_dims(field, cube.ranks, cube.d);
        for (std::size_t j = 0; j < dims.size(); ++j) out.set(static_cast<int>(j), i, dims[j]);
    }
    return out;
}

BigradedDims zero_degree_uber(const SimplicialComplex& x, const FieldCoefficients& coeff, const ComputeOptions& opts) {
    return std::visit([&](const auto& field) { return zero_degree_uber(x, field, opts); }, coeff);
}

template class CubeNodes<PrimeField>;
template class CubeNodes<RationalField>;
template CubeComplex<PrimeField> zero_degree_uber_complex(const CubeNodes<PrimeField>&, const PrimeField&, int,
                                                          const ComputeOptions&, SignConvention);
template CubeComplex<RationalField> zero_degree_uber_complex(const CubeNodes<RationalField>&, const RationalField&,
                                                             int, const ComputeOptions&, SignConvention);
template BigradedDims zero_degree_uber(const SimplicialComplex&, const PrimeField&, const ComputeOptions&,
                                       SignConvention);
template BigradedDims zero_degree_uber(const SimplicialComplex&, const RationalField&, const ComputeOptions&,
                                       SignConvention);
template std::vector<std::size_t> cochain_cohomology_dims(const PrimeField&, const std::vector<std::size_t>&,
                                                          const std::vector<Matrix<PrimeField::value_type>>&);
template std::vector<std::size_t> cochain_cohomology_dims(const RationalField&, const std::vector<std::size_t>&,
                                                          const std::vector<Matrix<RationalField::value_type>>&);

std::vector<Simplex> horizontal_simplices(const SimplexTable& table, Bicolouring e, int k, int dim) {
    std::vector<Simplex> out;
    for (Simplex s : table.simplices(dim))
        if (weight(s, e) == k) out.push_back(s);
    return out;
}

ChainComplex<PrimeField> horizontal_chain_complex(const SimplexTable& table, Bicolouring e, int k) {
    const PrimeField z2(2);
    std::vector<std::size_t> ranks;
    std::vector<Matrix<PrimeField::value_type>> boundaries;
    std::unordered_map<VertexMask, std::size_t> previous;  // weight-k faces one dimension down
    boundaries.emplace_back();
    for (int dim = 0; dim <= table.dimension(); ++dim) {
        const auto cells = horizontal_simplices(table, e, k, dim);
        ranks.push_back(cells.size());
        if (dim > 0) {
            auto m = zero_matrix(z2, ranks[static_cast<std::size_t>(dim - 1)], cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (VertexMask rest = cells[c].bits() & e; rest; rest &= rest - 1)
                    m(previous.at(cells[c].bits() & ~(rest & -rest)), c) = 1;
            boundaries.push_back(std::move(m));
        }
        previous.clear();
        for (std::size_t c = 0; c < cells.size(); ++c) previous.emplace(cells[c].bits(), c);
    }
    return ChainComplex<PrimeField>(z2, 0, std::move(ranks), std::move(boundaries));
}

std::map<std::pair<int, int>, std::size_t> horizontal_homology(const SimplicialComplex& x, Bicolouring e) {
    if (e & ~x.vertex_mask()) throw InputError("bicolouring has bits beyond the vertex count");
    std::map<std::pair<int, int>, std::size_t> out;
    for (int k = 0; k <= x.dimension() + 1; ++k) {
        const auto c = horizontal_chain_complex(x.table(), e, k);
        const auto betti = betti_numbers(c);
        for (std::size_t i = 0; i < betti.size(); ++i)
            if (betti[i]) out[{static_cast<int>(i), k}] = betti[i];
    }
    return out;
}

namespace {

struct HorizontalPiece {
    std::vector<Simplex> cells;
    std::unordered_map<VertexMask, std::size_t> index;
    HomologyBasis<PrimeField> homology;
};

}  // namespace

UberComplex uber_complex(const SimplicialComplex& x, const ComputeOptions& opts) {
    const std::size_t m = x.vertex_count();
    opts.check(m, kDefaultPosetGuard);
    const PrimeField z2(2);
    const int top = x.dimension();
    const std::size_t count = std::size_t{1} << m;
    // pieces[e][(k, i)]
    std::vector<std::map<std::pair<int, int>, HorizontalPiece>> pieces(count);
    parallel_for(count, opts.jobs, [&](std::size_t e) {
        for (int k = 0; k <= top + 1; ++k) {
            const auto c = horizontal_chain_complex(x.table(), e, k);
            for (int i = 0; i <= top; ++i) {
                if (c.rank(i) == 0) continue;
                HorizontalPiece piece{horizontal_simplices(x.table(), e, k, i), {}, HomologyBasis<PrimeField>(c, i)};
                for (std::size_t n = 0; n < piece.cells.size(); ++n) piece.index.emplace(piece.cells[n].bits(), n);
                pieces[e].emplace(std::make_pair(k, i), std::move(piece));
            }
        }
    });

    const auto levels = nodes_by_level(m);
    UberComplex out;
    out.vertex_count = m;
    for (int k = 0; k <= top + 1; ++k)
        for (int i = 0; i <= top; ++i) {
            const std::pair key{k, i};
            auto dim_at = [&](Bicolouring e) -> std::size_t {
                auto it = pieces[e].find(key);
                return it == pieces[e].end() ? 0 : it->second.homology.dimension();
            };
            UberComplex::Block block;
            std::vector<std::size_t> offset(count, 0);
            for (const auto& lvl : levels) {
                std::size_t total = 0;
                for (Bicolouring e : lvl) {
                    offset[e] = total;
                    total += dim_at(e);
                }
                block.ranks.push_back(total);
            }
            bool any = false;
            for (auto r : block.ranks) any = any || r > 0;
            if (!any) continue;
            for (std::size_t j = 0; j < m; ++j) {
                auto dj = zero_matrix(z2, block.ranks[j + 1], block.ranks[j]);
                for (Bicolouring e : levels[j]) {
                    auto src_it = pieces[e].find(key);
                    if (src_it == pieces[e].end()) continue;
                    const auto& src = src_it->second;
                    for (std::size_t v = 0; v < m; ++v) {
                        if (e & bit(v)) continue;
                        const Bicolouring f = e | bit(v);
                        auto dst_it = pieces[f].find(key);
                        for (std::size_t c = 0; c < src.homology.dimension(); ++c) {
                            const auto& z = src.homology.representatives()[c];
                            Vector<PrimeField::value_type> image(
                                dst_it == pieces[f].end() ? 0 : dst_it->second.cells.size(), 0);
                            for (std::size_t n = 0; n < z.size(); ++n) {
                                if (z[n] == 0) continue;
                                const Simplex s = src.cells[n];
                                const int w = weight(s, f);
                                if (s.contains(static_cast<VertexId>(v))) {
                                    if (w != k - 1) throw Error("uber edge map changed weight unexpectedly");
                                    continue;
                                }
                                if (w != k || dst_it == pieces[f].end())
                                    throw Error("uber edge map does not preserve (k, i)");
                                image[dst_it->second.index.at(s.bits())] = z[n];
                            }
                            if (dst_it == pieces[f].end()) continue;
                            auto coords = dst_it->second.homology.coordinates(image);
                            if (!coords) throw SolveFailure("uber edge map sent a cycle to a non-cycle");
                            for (std::size_t r = 0; r < coords->size(); ++r)
                                if ((*coords)[r]) dj(offset[f] + r, offset[e] + c) = (*coords)[r];
                        }
                    }
                }
                block.d.push_back(std::move(dj));
            }
            out.blocks.emplace(key, std::move(block));
        }
    return out;
}

TrigradedDims uberhomology(const UberComplex& c) {
    const PrimeField z2(2);
    TrigradedDims out;
    for (const auto& [key, block] : c.blocks) {
        const auto dims = cochain_cohomology_dims(z2, block.ranks, block.d);
        for (std::size_t j = 0; j < dims.size(); ++j)
            if (dims[j]) out.dims[{static_cast<int>(j), key.first, key.second}] = dims[j];
    }
    return out;
}

TrigradedDims uberhomology(const SimplicialComplex& x, const ComputeOptions& opts) {
    return uberhomology(uber_complex(x, opts));
}

namespace {

// Components of G[s] as vertex masks, ordered by least vertex.
std::vector<VertexMask> components(const Graph& g, VertexMask s) {
    std::vector<VertexMask> out;
    for (VertexMask rest = s; rest;) {
        VertexMask comp = rest & -rest, frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbours(static_cast<VertexId>(std::countr_zero(f)));
            next &= s & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

template <Ring R>
std::vector<Matrix<typename R::value_type>> bold_cochains(const Graph& g, const R& ring, const ComputeOptions& opts,
                                                          SignConvention convention,
                                                          std::vector<std::size_t>& ranks) {
    const std::size_t m = g.vertex_count();
    const std::size_t count = std::size_t{1} << m;
    std::vector<std::vector<VertexMask>> comps(count);
    parallel_for(count, opts.jobs, [&](std::size_t s) { comps[s] = components(g, static_cast<VertexMask>(s)); });
    const auto levels = nodes_by_level(m);
    std::vector<std::size_t> offset(count, 0);
    ranks.clear();
    for (const auto& lvl : levels) {
        std::size_t total = 0;
        for (Bicolouring s : lvl) {
            offset[s] = total;
            total += comps[s].size();
        }
        ranks.push_back(total);
    }
    std::vector<Matrix<typename R::value_type>> d;
    for (std::size_t j = 0; j < m; ++j) {
        auto dj = zero_matrix(ring, ranks[j + 1], ranks[j]);
        for (Bicolouring s : levels[j])
            for (std::size_t v = 0; v < m; ++v) {
                if (s & bit(v)) continue;
                const Bicolouring t = s | bit(v);
                const auto sign = ring.from_int(cube_sign(s, static_cast<VertexId>(v), convention));
                for (std::size_t c = 0; c < comps[s].size(); ++c) {
                    const VertexMask anchor = comps[s][c] & -comps[s][c];
                    std::size_t target = 0;
                    while (!(comps[t][target] & anchor)) ++target;
                    dj(offset[t] + target, offset[s] + c) = sign;
                }
            }
        d.push_back(std::move(dj));
    }
    return d;
}

}  // namespace

std::vector<AbelianGroup> bold_homology(const Graph& g, const Coefficients& coeff, const ComputeOptions& opts,
                                        SignConvention convention) {
    opts.check(g.vertex_count(), kDefaultPosetGuard);
    return std::visit(
        [&](const auto& ring) {
            using R = std::decay_t<decltype(ring)>;
            std::vector<std::size_t> ranks;
            const auto d = bold_cochains(g, ring, opts, convention, ranks);
            std::vector<AbelianGroup> out(ranks.size());
            if constexpr (std::is_same_v<R, IntegerRing>) {
                std::vector<std::vector<mpz_class>> divisors(d.size());
                parallel_for(d.size(), opts.jobs, [&](std::size_t j) { divisors[j] = elementary_divisors(d[j]); });
                for (std::size_t j = 0; j < ranks.size(); ++j) {
                    std::size_t free = ranks[j];
                    if (j < d.size()) free -= divisors[j].size();
                    if (j > 0) {
                        free -= divisors[j - 1].size();
                        for (const auto& t : divisors[j - 1])
                            if (t > 1) out[j].torsion.push_back(t);
                    }
                    out[j].free_rank = free;
                }
            } else {
                const auto dims = cochain_cohomology_dims(ring, ranks, d);
                for (std::size_t j = 0; j < dims.size(); ++j) out[j].free_rank = dims[j];
            }
            return out;
        },
        coeff);
}

std::vector<AbelianGroup> bold_homology(const SimplicialComplex& x, const Coefficients& coeff,
                                        const ComputeOptions& opts) {
    return bold_homology(one_skeleton(x), coeff, opts);
}

long euler_characteristic(const std::vector<AbelianGroup>& graded) {
    long chi = 0;
    for (std::size_t j = 0; j < graded.size(); ++j)
        chi += (j % 2 == 0 ? 1 : -1) * static_cast<long>(graded[j].free_rank);
    return chi;
}

BoldEulerReport bold_euler_report(const Graph& g, const ComputeOptions& opts) {
    BoldEulerReport r;
    r.bold_euler = euler_characteristic(bold_homology(g, Coefficients{RationalField{}}, opts));
    r.domination_at_minus_one = connected_domination_polynomial(g, opts).evaluate(-1);
    r.agrees = r.bold_euler == r.domination_at_minus_one;
    return r;
}

}  // namespace uberhom
