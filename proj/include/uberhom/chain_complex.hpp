#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/linalg.hpp"
#include "uberhom/smith.hpp"

namespace uberhom {

/// Graded free modules with differentials d_n : C_n -> C_{n-1}, nonzero only in
/// [bottom, top]. d_n d_{n+1} = 0 is checked on construction.
template <Ring R>
class ChainComplex {
public:
    using T = typename R::value_type;

    ChainComplex(R ring, int bottom, std::vector<std::size_t> ranks, std::vector<Matrix<T>> boundaries)
        : ring_(std::move(ring)), bottom_(bottom), ranks_(std::move(ranks)) {
        // boundaries[i] is d_{bottom + i}; d_bottom and d_{top+1} may be omitted
        boundaries_.resize(ranks_.size() + 1);
        for (std::size_t i = 0; i < boundaries_.size(); ++i) {
            const int n = bottom_ + static_cast<int>(i);
            const std::size_t want_rows = rank(n - 1), want_cols = rank(n);
            if (i < boundaries.size() && (boundaries[i].rows() != 0 || boundaries[i].cols() != 0)) {
                if (boundaries[i].rows() != want_rows || boundaries[i].cols() != want_cols)
                    throw InputError("boundary matrix d_" + std::to_string(n) + " has the wrong shape");
                boundaries_[i] = std::move(boundaries[i]);
            } else {
                boundaries_[i] = zero_matrix(ring_, want_rows, want_cols);
            }
        }
        for (int n = bottom_ + 1; n <= top(); ++n)
            if (!is_zero_matrix(ring_, multiply(ring_, boundary(n), boundary(n + 1))))
                throw InputError("d_" + std::to_string(n) + " d_" + std::to_string(n + 1) + " is not zero");
    }

    const R& ring() const noexcept { return ring_; }
    int bottom() const noexcept { return bottom_; }
    int top() const noexcept { return bottom_ + static_cast<int>(ranks_.size()) - 1; }

    std::size_t rank(int n) const {
        if (n < bottom_ || n > top()) return 0;
        return ranks_[static_cast<std::size_t>(n - bottom_)];
    }

    /// d_n as a rank(n-1) x rank(n) matrix.
    const Matrix<T>& boundary(int n) const {
        if (n < bottom_ || n > top() + 1) return empty_;
        return boundaries_[static_cast<std::size_t>(n - bottom_)];
    }

private:
    R ring_;
    int bottom_;
    std::vector<std::size_t> ranks_;
    std::vector<Matrix<T>> boundaries_;
    Matrix<T> empty_;
};

/// Boundary matrix from `dim`-simplices to (dim-1)-simplices of `table` with
/// signs (-1)^k for dropping the k-th vertex. dim = 0 with `augmented` gives the
/// augmentation row.
template <Ring R>
Matrix<typename R::value_type> simplicial_boundary(const R& ring, const SimplexTable& table, int dim, bool augmented) {
    if (dim == 0) {
        auto m = zero_matrix(ring, augmented ? 1 : 0, table.count(0));
        if (augmented)
            for (std::size_t c = 0; c < table.count(0); ++c) m(0, c) = ring.one();
        return m;
    }
    const auto& cols = table.simplices(dim);
    auto m = zero_matrix(ring, table.count(dim - 1), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int k = 0;
        for (VertexMask rest = cols[c].bits(); rest; rest &= rest - 1, ++k) {
            const Simplex face(cols[c].bits() & ~(rest & -rest));
            m(*table.index_of(face), c) = ring.from_int(k % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

template <Ring R>
ChainComplex<R> simplicial_chain_complex(const SimplexTable& table, const R& ring, bool reduced = false) {
    const int top = table.dimension();
    const int bottom = reduced ? -1 : 0;
    std::vector<std::size_t> ranks;
    std::vector<Matrix<typename R::value_type>> boundaries;
    if (reduced) {
        ranks.push_back(1);
        boundaries.emplace_back();
    }
    for (int n = 0; n <= top; ++n) ranks.push_back(table.count(n));
    if (!reduced) boundaries.emplace_back();  // d_0
    for (int n = 0; n <= top; ++n)
        if (n > 0 || reduced) boundaries.push_back(simplicial_boundary(ring, table, n, reduced));
    return ChainComplex<R>(ring, bottom, std::move(ranks), std::move(boundaries));
}

template <Ring R>
ChainComplex<R> simplicial_chain_complex(const SimplicialComplex& x, const R& ring, bool reduced = false) {
    return simplicial_chain_complex(x.table(), ring, reduced);
}

/// Matrix of the inclusion C_dim(sub) -> C_dim(super); both tables share numbering.
template <Ring R>
Matrix<typename R::value_type> inclusion_matrix(const R& ring, const SimplexTable& sub, const SimplexTable& super,
                                                int dim) {
    const auto& cols = sub.simplices(dim);
    auto m = zero_matrix(ring, super.count(dim), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto r = super.index_of(cols[c]);
        if (!r) throw InputError("inclusion source is not a subcomplex of the target");
        m(*r, c) = ring.one();
    }
    return m;
}

/// H_n of a chain complex over a field, with explicit representative cycles.
/// Boundaries come first in the echelon so that the representatives are the
/// kernel vectors independent modulo boundaries, in input order.
template <Field F>
class HomologyBasis {
public:
    using T = typename F::value_type;

    HomologyBasis(const ChainComplex<F>& c, int n)
        : field_(c.ring()), degree_(n), chain_dim_(c.rank(n)), echelon_(c.ring(), c.rank(n)) {
        const auto& in = c.boundary(n + 1);
        for (std::size_t j = 0; j < in.cols(); ++j) echelon_.insert(in.column(j));
        boundary_gens_ = in.cols();
        boundary_rank_ = echelon_.rank();
        for (auto& z : kernel(field_, c.boundary(n))) {
            const std::size_t id = echelon_.generator_count();
            if (!echelon_.insert(z)) {
                rep_ids_.push_back(id);
                reps_.push_back(std::move(z));
            }
        }
        cycle_rank_ = echelon_.rank();
    }

    const F& field() const noexcept { return field_; }
    int degree() const noexcept { return degree_; }
    std::size_t dimension() const noexcept { return reps_.size(); }
    std::size_t chain_dimension() const noexcept { return chain_dim_; }
    std::size_t boundary_rank() const noexcept { return boundary_rank_; }
    std::size_t cycle_rank() const noexcept { return cycle_rank_; }
    const std::vector<Vector<T>>& representatives() const noexcept { return reps_; }

    bool is_cycle(const Vector<T>& z) const { return echelon_.contains(z); }

    /// Coordinates of the class of z in the representative basis; nullopt if z
    /// is not a cycle.
    std::optional<Vector<T>> coordinates(const Vector<T>& z) const {
        auto combo = echelon_.express(z);
        if (!combo) return std::nullopt;
        Vector<T> out;
        out.reserve(rep_ids_.size());
        for (std::size_t id : rep_ids_) out.push_back((*combo)[id]);
        return out;
    }

    /// Some c in C_{n+1} with d c = b; nullopt if b is not a boundary.
    std::optional<Vector<T>> preimage(const Vector<T>& b) const {
        auto combo = echelon_.express(b);
        if (!combo) return std::nullopt;
        for (std::size_t id : rep_ids_)
            if (!field_.is_zero((*combo)[id])) return std::nullopt;
        combo->resize(boundary_gens_);
        return combo;
    }

private:
    F field_;
    int degree_;
    std::size_t chain_dim_;
    EchelonBasis<F> echelon_;
    std::size_t boundary_gens_ = 0;
    std::size_t boundary_rank_ = 0;
    std::size_t cycle_rank_ = 0;
    std::vector<std::size_t> rep_ids_;
    std::vector<Vector<T>> reps_;
};

/// Matrix of the map on homology induced by a degree-n chain map f
/// (target chains x source chains). Throws SolveFailure if f sends a
/// representative to a non-cycle.
template <Field F>
Matrix<typename F::value_type> induced_map_on_homology(const Matrix<typename F::value_type>& f,
                                                        const HomologyBasis<F>& src, const HomologyBasis<F>& dst) {
    if (f.cols() != src.chain_dimension() || f.rows() != dst.chain_dimension())
        throw InputError("chain map shape does not match the homology bases");
    const F& field = src.field();
    auto out = zero_matrix(field, dst.dimension(), src.dimension());
    for (std::size_t j = 0; j < src.dimension(); ++j) {
        auto coords = dst.coordinates(apply(field, f, src.representatives()[j]));
        if (!coords) throw SolveFailure("chain map sends a cycle to a non-cycle");
        out.set_column(j, *coords);
    }
    return out;
}

/// Finitely generated abelian group Z^free_rank + sum Z/t_i with t_1 | t_2 | ...
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string to_string(const AbelianGroup& g);

/// H_n over Z from the Smith forms of d_n and d_{n+1}.
AbelianGroup integral_homology(const ChainComplex<IntegerRing>& c, int n);

/// Dimension of H_n over a field, from ranks only.
template <Field F>
std::size_t betti_number(const ChainComplex<F>& c, int n) {
    return c.rank(n) - rank(c.ring(), c.boundary(n)) - rank(c.ring(), c.boundary(n + 1));
}

/// Betti numbers in degrees bottom..top over a field.
template <Field F>
std::vector<std::size_t> betti_numbers(const ChainComplex<F>& c) {
    std::vector<std::size_t> ranks;  // rank of d_n for n = bottom..top+1
    for (int n = c.bottom(); n <= c.top() + 1; ++n) ranks.push_back(rank(c.ring(), c.boundary(n)));
    std::vector<std::size_t> out;
    for (int n = c.bottom(); n <= c.top(); ++n) {
        const auto i = static_cast<std::size_t>(n - c.bottom());
        out.push_back(c.rank(n) - ranks[i] - ranks[i + 1]);
    }
    return out;
}

/// Homology groups of a simplicial complex in degrees 0..dim (or -1..dim when
/// reduced) for any supported coefficients; over a field torsion is empty.
std::vector<AbelianGroup> simplicial_homology(const SimplexTable& table, const Coefficients& coeff, bool reduced);
std::vector<AbelianGroup> simplicial_homology(const SimplicialComplex& x, const Coefficients& coeff, bool reduced);

/// A chain map given degreewise: map(n) is target.rank(n) x source.rank(n).
template <Ring R>
class ChainMap {
public:
    using T = typename R::value_type;

    ChainMap(ChainComplex<R> source, ChainComplex<R> target, int bottom, std::vector<Matrix<T>> maps)
        : source_(std::move(source)), target_(std::move(target)), bottom_(bottom), maps_(std::move(maps)) {
        if (!(source_.ring() == target_.ring())) throw RingMismatch();
        for (std::size_t i = 0; i < maps_.size(); ++i) {
            const int n = bottom_ + static_cast<int>(i);
            if (maps_[i].rows() != target_.rank(n) || maps_[i].cols() != source_.rank(n))
                throw InputError("chain map component " + std::to_string(n) + " has the wrong shape");
        }
        const auto& ring = source_.ring();
        const int lo = std::min(source_.bottom(), target_.bottom());
        const int hi = std::max(source_.top(), target_.top());
        for (int n = lo + 1; n <= hi; ++n) {
            const Matrix<T> fd = multiply(ring, map(n - 1), source_.boundary(n));
            const Matrix<T> df = multiply(ring, target_.boundary(n), map(n));
            if (!(fd == df)) throw InputError("not a chain map in degree " + std::to_string(n));
        }
    }

    const ChainComplex<R>& source() const noexcept { return source_; }
    const ChainComplex<R>& target() const noexcept { return target_; }

    Matrix<T> map(int n) const {
        const int i = n - bottom_;
        if (i >= 0 && i < static_cast<int>(maps_.size())) return maps_[static_cast<std::size_t>(i)];
        return zero_matrix(source_.ring(), target_.rank(n), source_.rank(n));
    }

private:
    ChainComplex<R> source_;
    ChainComplex<R> target_;
    int bottom_;
    std::vector<Matrix<T>> maps_;
};

/// Cone(f)_n = D_n + C_{n-1} with d = [[d^D, -f], [0, -d^C]]. The sign on
/// d^C makes d square to zero for an honest chain map f.
template <Ring R>
ChainComplex<R> mapping_cone(const ChainMap<R>& f) {
    const auto& c = f.source();
    const auto& d = f.target();
    const R& ring = c.ring();
    const int bottom = std::min(d.bottom(), c.bottom() + 1);
    const int top = std::max(d.top(), c.top() + 1);
    auto cone_rank = [&](int n) { return d.rank(n) + c.rank(n - 1); };
    std::vector<std::size_t> ranks;
    std::vector<Matrix<typename R::value_type>> boundaries;
    for (int n = bottom; n <= top; ++n) ranks.push_back(cone_rank(n));
    for (int n = bottom; n <= top; ++n) {
        auto m = zero_matrix(ring, cone_rank(n - 1), cone_rank(n));
        const auto& dd = d.boundary(n);
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t k = 0; k < dd.cols(); ++k) m(r, k) = dd(r, k);
        const auto fm = f.map(n - 1);
        for (std::size_t r = 0; r < fm.rows(); ++r)
            for (std::size_t k = 0; k < fm.cols(); ++k) m(r, d.rank(n) + k) = ring.neg(fm(r, k));
        const auto& dc = c.boundary(n - 1);
        for (std::size_t r = 0; r < dc.rows(); ++r)
            for (std::size_t k = 0; k < dc.cols(); ++k) m(d.rank(n - 1) + r, d.rank(n) + k) = ring.neg(dc(r, k));
        boundaries.push_back(std::move(m));
    }
    return ChainComplex<R>(ring, bottom, std::move(ranks), std::move(boundaries));
}

/// Every induced subcomplex has vanishing reduced homology in degrees >= d,
/// over both Q and Z2. Enumerates all 2^m vertex subsets (guard 16 by default).
bool is_d_leray(const SimplicialComplex& x, int d, const ComputeOptions& opts = {});
/// Same check restricted to proper vertex subsets, which is the d-Leray
/// property of every element of the anti-star cover at once.
bool anti_star_cover_is_d_leray(const SimplicialComplex& x, int d, const ComputeOptions& opts = {});

}  // namespace uberhom
