#include "uberhom/mvss.hpp"

#include <algorithm>

namespace uberhom {

namespace {

template <class T>
Vector<T> slice(const Vector<T>& v, std::size_t from, std::size_t len) {
    return Vector<T>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

}  // namespace

template <Field F>
DoubleComplex<F>::DoubleComplex(const Cover& cover, F field, bool augmented, const ComputeOptions& opts)
    : field_(std::move(field)), augmented_(augmented), q_max_(cover.ambient().dimension()) {
    opts.check(cover.size(), kDefaultPosetGuard);
    const SimplicialComplex n = nerve(cover);

    // (p, index set, table) for every block, then build chains in parallel
    std::vector<std::pair<int, VertexMask>> specs;
    if (augmented_) specs.emplace_back(-1, 0);
    for (int p = 0; p <= n.dimension(); ++p)
        for (Simplex j : n.simplices(p)) specs.emplace_back(p, j.bits());

    std::vector<std::optional<Block>> built(specs.size());
    parallel_for(specs.size(), opts.jobs, [&](std::size_t s) {
        const auto [p, set] = specs[s];
        SimplexTable table = set == 0 ? cover.ambient().table() : cover.intersection_table(set);
        auto chains = simplicial_chain_complex(table, field_, false);
        std::vector<HomologyBasis<F>> homology;
        for (int q = 0; q <= table.dimension(); ++q) homology.emplace_back(chains, q);
        built[s] = Block{set, std::move(table), std::move(chains), std::move(homology)};
    });

    const int columns = (augmented_ ? 1 : 0) + n.dimension() + 1;
    columns_.resize(static_cast<std::size_t>(std::max(columns, 0)));
    lookup_.resize(columns_.size());
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const auto c = static_cast<std::size_t>(specs[s].first - p_min());
        lookup_[c].emplace(specs[s].second, columns_[c].size());
        columns_[c].push_back(std::move(*built[s]));
    }

    const auto qs = static_cast<std::size_t>(q_max_ + 1);
    offsets_.assign(columns_.size(), std::vector<std::vector<std::size_t>>(qs));
    e1_offsets_.assign(columns_.size(), std::vector<std::vector<std::size_t>>(qs));
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (std::size_t q = 0; q < qs; ++q) {
            std::size_t total = 0, e1_total = 0;
            for (const auto& b : columns_[c]) {
                offsets_[c][q].push_back(total);
                e1_offsets_[c][q].push_back(e1_total);
                total += b.table.count(static_cast<int>(q));
                if (q < b.homology.size()) e1_total += b.homology[q].dimension();
            }
            offsets_[c][q].push_back(total);
            e1_offsets_[c][q].push_back(e1_total);
        }
}

template <Field F>
std::optional<std::size_t> DoubleComplex<F>::find_block(int p, VertexMask index_set) const {
    if (p < p_min() || p > p_max()) return std::nullopt;
    const auto& m = lookup_[static_cast<std::size_t>(p - p_min())];
    auto it = m.find(index_set);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

template <Field F>
std::size_t DoubleComplex<F>::dim(int p, int q) const {
    if (!in_range(p, q)) return 0;
    return offsets_[static_cast<std::size_t>(p - p_min())][static_cast<std::size_t>(q)].back();
}

template <Field F>
std::size_t DoubleComplex<F>::block_offset(int p, std::size_t b, int q) const {
    return offsets_.at(static_cast<std::size_t>(p - p_min())).at(static_cast<std::size_t>(q)).at(b);
}

template <Field F>
std::size_t DoubleComplex<F>::e1_dim(int p, int q) const {
    if (!in_range(p, q)) return 0;
    return e1_offsets_[static_cast<std::size_t>(p - p_min())][static_cast<std::size_t>(q)].back();
}

template <Field F>
std::size_t DoubleComplex<F>::e1_block_offset(int p, std::size_t b, int q) const {
    return e1_offsets_.at(static_cast<std::size_t>(p - p_min())).at(static_cast<std::size_t>(q)).at(b);
}

template <Field F>
auto DoubleComplex<F>::vertical(int p, int q, const Vector<T>& x) const -> Vector<T> {
    Vector<T> out(dim(p, q - 1), field_.zero());
    if (q <= 0 || !in_range(p, q)) return out;
    const auto& blocks = column(p);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t n = blocks[b].table.count(q);
        if (n == 0) continue;
        const auto image = apply(field_, blocks[b].chains.boundary(q), slice(x, block_offset(p, b, q), n));
        std::copy(image.begin(), image.end(), out.begin() + static_cast<std::ptrdiff_t>(block_offset(p, b, q - 1)));
    }
    return out;
}

template <Field F>
auto DoubleComplex<F>::horizontal(int p, int q, const Vector<T>& x) const -> Vector<T> {
    Vector<T> out(dim(p - 1, q), field_.zero());
    if (p - 1 < p_min() || !in_range(p, q)) return out;
    const auto& blocks = column(p);
    const auto& targets = column(p - 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& simplices = blocks[b].table.simplices(q);
        const std::size_t base = block_offset(p, b, q);
        int k = 0;
        for (VertexMask rest = blocks[b].index_set; rest; rest &= rest - 1, ++k) {
            const VertexMask face = blocks[b].index_set & ~(rest & -rest);
            const std::size_t tb = *find_block(p - 1, face);
            const std::size_t tbase = block_offset(p - 1, tb, q);
            const T sign = field_.from_int(k % 2 == 0 ? 1 : -1);
            for (std::size_t s = 0; s < simplices.size(); ++s) {
                const T& c = x[base + s];
                if (field_.is_zero(c)) continue;
                auto& slot = out[tbase + *targets[tb].table.index_of(simplices[s])];
                slot = field_.add(slot, field_.mul(sign, c));
            }
        }
    }
    return out;
}

template <Field F>
auto DoubleComplex<F>::vertical_matrix(int p, int q) const -> Matrix<T> {
    Matrix<T> m = zero_matrix(field_, dim(p, q - 1), dim(p, q));
    for (std::size_t c = 0; c < dim(p, q); ++c) {
        Vector<T> e(dim(p, q), field_.zero());
        e[c] = field_.one();
        m.set_column(c, vertical(p, q, e));
    }
    return m;
}

template <Field F>
auto DoubleComplex<F>::horizontal_matrix(int p, int q) const -> Matrix<T> {
    Matrix<T> m = zero_matrix(field_, dim(p - 1, q), dim(p, q));
    for (std::size_t c = 0; c < dim(p, q); ++c) {
        Vector<T> e(dim(p, q), field_.zero());
        e[c] = field_.one();
        m.set_column(c, horizontal(p, q, e));
    }
    return m;
}

template <Field F>
auto DoubleComplex<F>::e1_class(int p, int q, const Vector<T>& cycle) const -> Vector<T> {
    Vector<T> out(e1_dim(p, q), field_.zero());
    if (!in_range(p, q)) return out;
    const auto& blocks = column(p);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t n = blocks[b].table.count(q);
        if (n == 0) continue;
        auto coords = blocks[b].homology[static_cast<std::size_t>(q)].coordinates(slice(cycle, block_offset(p, b, q), n));
        if (!coords) throw LiftFailure("chain at (" + std::to_string(p) + ", " + std::to_string(q) + ") is not a vertical cycle");
        std::copy(coords->begin(), coords->end(), out.begin() + static_cast<std::ptrdiff_t>(e1_block_offset(p, b, q)));
    }
    return out;
}

template <Field F>
auto DoubleComplex<F>::e1_representative(int p, int q, std::size_t k) const -> Vector<T> {
    Vector<T> out(dim(p, q), field_.zero());
    const auto& blocks = column(p);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t lo = e1_block_offset(p, b, q), hi = e1_block_offset(p, b + 1, q);
        if (k < lo || k >= hi) continue;
        const auto& rep = blocks[b].homology[static_cast<std::size_t>(q)].representatives()[k - lo];
        std::copy(rep.begin(), rep.end(), out.begin() + static_cast<std::ptrdiff_t>(block_offset(p, b, q)));
        return out;
    }
    throw InputError("E1 basis index out of range");
}

template <Field F>
auto DoubleComplex<F>::vertical_preimage(int p, int q, const Vector<T>& target) const -> std::optional<Vector<T>> {
    Vector<T> out(dim(p, q + 1), field_.zero());
    const auto& blocks = column(p);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t n = blocks[b].table.count(q);
        if (n == 0) continue;
        const auto piece = slice(target, block_offset(p, b, q), n);
        if (is_zero_vector(field_, piece)) continue;
        auto pre = blocks[b].homology[static_cast<std::size_t>(q)].preimage(piece);
        if (!pre) return std::nullopt;
        std::copy(pre->begin(), pre->end(), out.begin() + static_cast<std::ptrdiff_t>(block_offset(p, b, q + 1)));
    }
    return out;
}

template <Field F>
bool Page<F>::is_zero() const {
    for (const auto& col : cells)
        for (const auto& c : col)
            if (c.dimension()) return false;
    return true;
}

template <Field F>
bool Page<F>::differentials_vanish(const F& field) const {
    for (const auto& [key, m] : differentials)
        if (!is_zero_matrix(field, m)) return false;
    return true;
}

namespace {

template <Field F>
void add_part(const F& field, std::map<int, Vector<typename F::value_type>>& parts, int p, std::size_t dim,
              const typename F::value_type& c, const Vector<typename F::value_type>& v) {
    if (field.is_zero(c) || dim == 0) return;
    auto& slot = parts[p];
    if (slot.empty()) slot.assign(dim, field.zero());
    axpy(field, slot, c, v);
}

template <Field F>
void add_chain(const F& field, const DoubleComplex<F>& dc, TotalChain<typename F::value_type>& a,
               const typename F::value_type& c, const TotalChain<typename F::value_type>& b) {
    for (const auto& [p, v] : b.parts) add_part(field, a.parts, p, dc.dim(p, b.degree - p), c, v);
}

template <Field F>
TotalChain<typename F::value_type> total_differential(const DoubleComplex<F>& dc,
                                                      const TotalChain<typename F::value_type>& x) {
    const F& field = dc.field();
    TotalChain<typename F::value_type> out{x.degree - 1, {}};
    for (const auto& [p, v] : x.parts) {
        const int q = x.degree - p;
        add_part(field, out.parts, p - 1, dc.dim(p - 1, q), field.one(), dc.horizontal(p, q, v));
        add_part(field, out.parts, p, dc.dim(p, q - 1), field.from_int(p % 2 == 0 ? 1 : -1), dc.vertical(p, q, v));
    }
    return out;
}

template <Field F>
Vector<typename F::value_type> part_at(const DoubleComplex<F>& dc, const TotalChain<typename F::value_type>& x, int p) {
    auto it = x.parts.find(p);
    if (it != x.parts.end()) return it->second;
    return Vector<typename F::value_type>(dc.dim(p, x.degree - p), dc.field().zero());
}

template <Field F>
EchelonBasis<F> cell_basis(const F& field, std::size_t e1_dim, const PageCell<typename F::value_type>& cell) {
    EchelonBasis<F> basis(field, e1_dim);
    for (const auto& b : cell.boundary_e1) basis.insert(b);
    for (const auto& r : cell.rep_e1) basis.insert(r);
    return basis;
}

template <Field F>
Page<F> empty_page(const DoubleComplex<F>& dc, int r) {
    Page<F> page;
    page.r = r;
    page.p_min = dc.p_min();
    page.p_max = dc.p_max();
    page.q_max = dc.q_max();
    page.cells.assign(static_cast<std::size_t>(std::max(page.p_max - page.p_min + 1, 0)),
                      std::vector<PageCell<typename F::value_type>>(static_cast<std::size_t>(page.q_max + 1)));
    return page;
}

}  // namespace

template <Field F>
Page<F> first_page(const DoubleComplex<F>& dc, const ComputeOptions& opts) {
    using T = typename F::value_type;
    const F& field = dc.field();
    Page<F> page = empty_page(dc, 1);
    for (int p = dc.p_min(); p <= dc.p_max(); ++p)
        for (int q = 0; q <= dc.q_max(); ++q) {
            auto& cell = page.cell(p, q);
            for (std::size_t k = 0; k < dc.e1_dim(p, q); ++k) {
                Vector<T> e(dc.e1_dim(p, q), field.zero());
                e[k] = field.one();
                cell.rep_e1.push_back(std::move(e));
                cell.rep_lift.push_back(TotalChain<T>{p + q, {{p, dc.e1_representative(p, q, k)}}});
            }
        }

    // d1 from the maps induced by U_J -> U_{J - j_k}, signed (-1)^k
    std::vector<std::pair<int, int>> sources;
    for (int p = dc.p_min() + 1; p <= dc.p_max(); ++p)
        for (int q = 0; q <= dc.q_max(); ++q) sources.emplace_back(p, q);
    std::vector<Matrix<T>> mats(sources.size());
    parallel_for(sources.size(), opts.jobs, [&](std::size_t s) {
        const auto [p, q] = sources[s];
        Matrix<T> d1 = zero_matrix(field, dc.e1_dim(p - 1, q), dc.e1_dim(p, q));
        const auto& blocks = dc.column(p);
        const auto& targets = dc.column(p - 1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (static_cast<std::size_t>(q) >= blocks[b].homology.size()) continue;
            const auto& src = blocks[b].homology[static_cast<std::size_t>(q)];
            if (src.dimension() == 0) continue;
            int k = 0;
            for (VertexMask rest = blocks[b].index_set; rest; rest &= rest - 1, ++k) {
                const std::size_t tb = *dc.find_block(p - 1, blocks[b].index_set & ~(rest & -rest));
                const auto& dst = targets[tb].homology[static_cast<std::size_t>(q)];
                const auto f = inclusion_matrix(field, blocks[b].table, targets[tb].table, q);
                const auto induced = induced_map_on_homology(f, src, dst);
                const T sign = field.from_int(k % 2 == 0 ? 1 : -1);
                const std::size_t r0 = dc.e1_block_offset(p - 1, tb, q), c0 = dc.e1_block_offset(p, b, q);
                for (std::size_t i = 0; i < induced.rows(); ++i)
                    for (std::size_t j = 0; j < induced.cols(); ++j)
                        if (!field.is_zero(induced(i, j)))
                            d1(r0 + i, c0 + j) = field.add(d1(r0 + i, c0 + j), field.mul(sign, induced(i, j)));
            }
        }
        mats[s] = std::move(d1);
    });
    for (std::size_t s = 0; s < sources.size(); ++s) {
        const auto [p, q] = sources[s];
        std::vector<Vector<T>> images;
        for (std::size_t j = 0; j < mats[s].cols(); ++j) images.push_back(mats[s].column(j));
        page.image_classes.emplace(sources[s], std::move(images));
        page.differentials.emplace(sources[s], std::move(mats[s]));
        (void)p;
        (void)q;
    }
    return page;
}

template <Field F>
void compute_differentials(const DoubleComplex<F>& dc, Page<F>& page, const ComputeOptions& opts) {
    using T = typename F::value_type;
    const F& field = dc.field();
    const int r = page.r;
    page.differentials.clear();
    page.image_classes.clear();

    std::vector<std::pair<int, int>> sources;
    for (int p = page.p_min; p <= page.p_max; ++p)
        for (int q = 0; q <= page.q_max; ++q) sources.emplace_back(p, q);

    // target bases are shared read-only by the workers
    std::map<std::pair<int, int>, EchelonBasis<F>> bases;
    for (auto [p, q] : sources)
        if (page.in_range(p - r, q + r - 1) && page.cell(p, q).dimension() > 0)
            bases.try_emplace({p - r, q + r - 1},
                              cell_basis(field, dc.e1_dim(p - r, q + r - 1), page.cell(p - r, q + r - 1)));

    std::vector<std::optional<std::pair<Matrix<T>, std::vector<Vector<T>>>>> results(sources.size());
    parallel_for(sources.size(), opts.jobs, [&](std::size_t s) {
        const auto [p, q] = sources[s];
        const auto& cell = page.cell(p, q);
        const bool target_ok = page.in_range(p - r, q + r - 1);
        Matrix<T> d = zero_matrix(field, target_ok ? page.cell(p - r, q + r - 1).dimension() : 0, cell.dimension());
        std::vector<Vector<T>> images;
        for (std::size_t i = 0; i < cell.dimension(); ++i) {
            const auto y = total_differential(dc, cell.rep_lift[i]);
            for (const auto& [col, v] : y.parts)
                if (col > p - r && !is_zero_vector(field, v))
                    throw LiftFailure("lift at (" + std::to_string(p) + ", " + std::to_string(q) +
                                      ") leaves a residue within " + std::to_string(r) + " columns");
            if (!target_ok) continue;
            const auto cls = dc.e1_class(p - r, q + r - 1, part_at(dc, y, p - r));
            const auto& basis = bases.at({p - r, q + r - 1});
            auto coeffs = basis.express(cls);
            if (!coeffs) throw LiftFailure("d^" + std::to_string(r) + " image is not a cycle of the earlier pages");
            const std::size_t nb = page.cell(p - r, q + r - 1).boundary_e1.size();
            for (std::size_t k = 0; k < d.rows(); ++k) d(k, i) = (*coeffs)[nb + k];
            images.push_back(cls);
        }
        if (target_ok) results[s].emplace(std::move(d), std::move(images));
    });
    for (std::size_t s = 0; s < sources.size(); ++s) {
        if (!results[s]) continue;
        page.differentials.emplace(sources[s], std::move(results[s]->first));
        page.image_classes.emplace(sources[s], std::move(results[s]->second));
    }
}

template <Field F>
Page<F> turn_page(const DoubleComplex<F>& dc, const Page<F>& page, const ComputeOptions& opts) {
    using T = typename F::value_type;
    const F& field = dc.field();
    const int r = page.r;
    Page<F> next = empty_page(dc, r + 1);

    // B^{r+1} = B^r + images of d^r
    for (int p = page.p_min; p <= page.p_max; ++p)
        for (int q = 0; q <= page.q_max; ++q) {
            next.cell(p, q).boundary_e1 = page.cell(p, q).boundary_e1;
            next.cell(p, q).boundary_lift = page.cell(p, q).boundary_lift;
        }
    for (const auto& [src, images] : page.image_classes) {
        const auto [p, q] = src;
        auto& target = next.cell(p - r, q + r - 1);
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (is_zero_vector(field, images[i])) continue;
            target.boundary_e1.push_back(images[i]);
            target.boundary_lift.push_back(page.cell(p, q).rep_lift[i]);
        }
    }

    std::vector<std::pair<int, int>> cells;
    for (int p = page.p_min; p <= page.p_max; ++p)
        for (int q = 0; q <= page.q_max; ++q) cells.emplace_back(p, q);

    std::map<std::pair<int, int>, EchelonBasis<F>> bases;  // old page, for the correction step
    for (auto [p, q] : cells)
        if (page.in_range(p - r, q + r - 1) && page.cell(p, q).dimension() > 0)
            bases.try_emplace({p - r, q + r - 1},
                              cell_basis(field, dc.e1_dim(p - r, q + r - 1), page.cell(p - r, q + r - 1)));

    parallel_for(cells.size(), opts.jobs, [&](std::size_t s) {
        const auto [p, q] = cells[s];
        const auto& old = page.cell(p, q);
        auto& cell = next.cell(p, q);
        if (old.dimension() == 0) return;

        std::vector<Vector<T>> combos;
        auto out_it = page.differentials.find({p, q});
        if (out_it != page.differentials.end()) {
            combos = kernel(field, out_it->second);
        } else {
            for (std::size_t i = 0; i < old.dimension(); ++i) {
                Vector<T> e(old.dimension(), field.zero());
                e[i] = field.one();
                combos.push_back(std::move(e));
            }
        }
        std::size_t incoming_rank = 0;
        auto in_it = page.differentials.find({p + r, q - r + 1});
        if (in_it != page.differentials.end()) incoming_rank = rank(field, in_it->second);

        EchelonBasis<F> basis(field, dc.e1_dim(p, q));
        for (const auto& b : cell.boundary_e1) basis.insert(b);
        const bool target_ok = page.in_range(p - r, q + r - 1);
        for (const auto& c : combos) {
            TotalChain<T> x{p + q, {}};
            Vector<T> e1(dc.e1_dim(p, q), field.zero());
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (field.is_zero(c[i])) continue;
                add_chain(field, dc, x, c[i], old.rep_lift[i]);
                axpy(field, e1, c[i], old.rep_e1[i]);
            }
            if (target_ok) {
                // push D x one more column down: subtract boundary lifts, then a vertical preimage
                const int tp = p - r, tq = q + r - 1;
                const auto y = total_differential(dc, x);
                Vector<T> z = part_at(dc, y, tp);
                const auto& tcell = page.cell(tp, tq);
                auto coeffs = bases.at({tp, tq}).express(dc.e1_class(tp, tq, z));
                if (!coeffs) throw LiftFailure("kernel class does not reduce into B^r");
                for (std::size_t k = tcell.boundary_e1.size(); k < coeffs->size(); ++k)
                    if (!field.is_zero((*coeffs)[k])) throw LiftFailure("kernel vector has a nonzero d^r image");
                for (std::size_t k = 0; k < tcell.boundary_e1.size(); ++k) {
                    const T beta = (*coeffs)[k];
                    if (field.is_zero(beta)) continue;
                    const auto w = part_at(dc, total_differential(dc, tcell.boundary_lift[k]), tp);
                    axpy(field, z, field.neg(beta), w);
                    add_chain(field, dc, x, field.neg(beta), tcell.boundary_lift[k]);
                }
                auto u = dc.vertical_preimage(tp, tq, z);
                if (!u) throw LiftFailure("zig-zag step has no vertical preimage");
                add_part(field, x.parts, tp, dc.dim(tp, tq + 1), field.from_int(tp % 2 == 0 ? -1 : 1), *u);
            }
            if (basis.insert(e1)) continue;  // dependent modulo B^{r+1}
            cell.rep_e1.push_back(std::move(e1));
            cell.rep_lift.push_back(std::move(x));
        }
        if (cell.dimension() + incoming_rank != combos.size())
            throw LiftFailure("page " + std::to_string(r + 1) + " cell (" + std::to_string(p) + ", " +
                              std::to_string(q) + ") has the wrong dimension");
    });

    compute_differentials(dc, next, opts);
    return next;
}

template <Field F>
const Page<F>& SpectralSequence<F>::page(int r) const {
    if (r < 1) throw InputError("pages start at r = 1");
    const auto idx = static_cast<std::size_t>(r - 1);
    return idx < pages_.size() ? pages_[idx] : pages_.back();
}

template <Field F>
SpectralSequence<F> run_to_convergence(DoubleComplex<F> dc, const ComputeOptions& opts) {
    std::vector<Page<F>> pages;
    pages.push_back(first_page(dc, opts));
    const int reach = std::min(dc.p_max() - dc.p_min(), dc.q_max() + 1);
    while (pages.back().r <= reach && !pages.back().is_zero()) pages.push_back(turn_page(dc, pages.back(), opts));
    int converged = 1;
    for (const auto& pg : pages)
        if (!pg.differentials_vanish(dc.field())) converged = pg.r + 1;
    return SpectralSequence<F>(std::move(dc), std::move(pages), converged);
}

template <Field F>
SpectralSequence<F> anti_star_spectral_sequence(const SimplicialComplex& x, const F& field, bool augmented,
                                                const ComputeOptions& opts) {
    return run_to_convergence(DoubleComplex<F>(anti_star_cover(x), field, augmented, opts), opts);
}

#define UBERHOM_INSTANTIATE(F)                                                                              \
    template class DoubleComplex<F>;                                                                       \
    template struct Page<F>;                                                                               \
    template class SpectralSequence<F>;                                                                    \
    template Page<F> first_page(const DoubleComplex<F>&, const ComputeOptions&);                           \
    template void compute_differentials(const DoubleComplex<F>&, Page<F>&, const ComputeOptions&);         \
    template Page<F> turn_page(const DoubleComplex<F>&, const Page<F>&, const ComputeOptions&);            \
    template SpectralSequence<F> run_to_convergence(DoubleComplex<F>, const ComputeOptions&);              \
    template SpectralSequence<F> anti_star_spectral_sequence(const SimplicialComplex&, const F&, bool,     \
                                                             const ComputeOptions&);

UBERHOM_INSTANTIATE(PrimeField)
UBERHOM_INSTANTIATE(RationalField)

#undef UBERHOM_INSTANTIATE

}  // namespace uberhom
