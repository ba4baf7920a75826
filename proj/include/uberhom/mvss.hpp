#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uberhom/chain_complex.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/options.hpp"

namespace uberhom {

/// E0_{p,q} = sum over p-simplices J of the nerve of C_q(U_J), with
/// d_v the blockwise simplicial boundary and d_h(s in U_J) = sum_k (-1)^k s in
/// U_{J minus j_k}. The augmented variant adds the column p = -1 holding C_q(X).
template <Field F>
class DoubleComplex {
public:
    using T = typename F::value_type;

    struct Block {
        /// Index set J as a bitmask; 0 for the augmentation column.
        VertexMask index_set = 0;
        SimplexTable table;
        ChainComplex<F> chains;
        /// Vertical homology H_q(U_J) for q = 0..dim U_J.
        std::vector<HomologyBasis<F>> homology;
    };

    DoubleComplex(const Cover& cover, F field, bool augmented, const ComputeOptions& opts = {});

    const F& field() const noexcept { return field_; }
    bool augmented() const noexcept { return augmented_; }
    int p_min() const noexcept { return augmented_ ? -1 : 0; }
    int p_max() const noexcept { return p_min() + static_cast<int>(columns_.size()) - 1; }
    int q_max() const noexcept { return q_max_; }
    bool in_range(int p, int q) const { return p >= p_min() && p <= p_max() && q >= 0 && q <= q_max_; }

    const std::vector<Block>& column(int p) const { return columns_.at(static_cast<std::size_t>(p - p_min())); }
    std::optional<std::size_t> find_block(int p, VertexMask index_set) const;

    /// dim E0_{p,q}; zero outside the grid.
    std::size_t dim(int p, int q) const;
    std::size_t block_offset(int p, std::size_t b, int q) const;
    /// dim E1_{p,q} = sum_J dim H_q(U_J).
    std::size_t e1_dim(int p, int q) const;
    std::size_t e1_block_offset(int p, std::size_t b, int q) const;

    /// d_v : E0_{p,q} -> E0_{p,q-1}, without the (-1)^p of the total differential.
    Vector<T> vertical(int p, int q, const Vector<T>& x) const;
    /// d_h : E0_{p,q} -> E0_{p-1,q}.
    Vector<T> horizontal(int p, int q, const Vector<T>& x) const;
    Matrix<T> vertical_matrix(int p, int q) const;
    Matrix<T> horizontal_matrix(int p, int q) const;

    /// E1 coordinates of a d_v-cycle; throws LiftFailure on a non-cycle.
    Vector<T> e1_class(int p, int q, const Vector<T>& cycle) const;
    /// The E0 cycle representing E1 basis vector k at (p, q).
    Vector<T> e1_representative(int p, int q, std::size_t k) const;
    /// Some u in E0_{p,q+1} with d_v u = b, or nullopt if b is not a boundary.
    std::optional<Vector<T>> vertical_preimage(int p, int q, const Vector<T>& b) const;

private:
    F field_;
    bool augmented_;
    int q_max_ = -1;
    std::vector<std::vector<Block>> columns_;
    std::vector<std::unordered_map<VertexMask, std::size_t>> lookup_;
    // offsets_[p - p_min][q][b], e1_offsets_ likewise; the last entry is the total
    std::vector<std::vector<std::vector<std::size_t>>> offsets_;
    std::vector<std::vector<std::vector<std::size_t>>> e1_offsets_;
};

/// An element of the total complex of degree `degree`, stored by column p; the
/// part at p lies in E0_{p, degree - p}. Missing columns are zero.
template <class T>
struct TotalChain {
    int degree = 0;
    std::map<int, Vector<T>> parts;
};

/// One cell of a page: E^r_{p,q} = Z^r / B^r inside E1_{p,q}. Each boundary
/// generator comes with a chain L whose total differential has its top part at
/// this cell representing it; each representative comes with a lift x whose
/// total differential lies r columns to the left or further.
template <class T>
struct PageCell {
    std::vector<Vector<T>> boundary_e1;
    std::vector<TotalChain<T>> boundary_lift;
    std::vector<Vector<T>> rep_e1;
    std::vector<TotalChain<T>> rep_lift;

    std::size_t dimension() const noexcept { return rep_e1.size(); }
};

template <Field F>
struct Page {
    using T = typename F::value_type;

    int r = 1;
    int p_min = 0;
    int p_max = -1;
    int q_max = -1;
    std::vector<std::vector<PageCell<T>>> cells;  // [p - p_min][q]
    /// d^r out of (p, q) into (p - r, q + r - 1), keyed by source; present
    /// whenever both ends lie in the grid.
    std::map<std::pair<int, int>, Matrix<T>> differentials;
    /// E1 classes of the parts hit by d^r, one per source representative, in
    /// the same keys as `differentials`.
    std::map<std::pair<int, int>, std::vector<Vector<T>>> image_classes;

    bool in_range(int p, int q) const { return p >= p_min && p <= p_max && q >= 0 && q <= q_max; }
    const PageCell<T>& cell(int p, int q) const {
        return cells.at(static_cast<std::size_t>(p - p_min)).at(static_cast<std::size_t>(q));
    }
    PageCell<T>& cell(int p, int q) {
        return cells.at(static_cast<std::size_t>(p - p_min)).at(static_cast<std::size_t>(q));
    }
    std::size_t dim(int p, int q) const { return in_range(p, q) ? cell(p, q).dimension() : 0; }
    bool is_zero() const;
    bool differentials_vanish(const F& field) const;
};

/// E1 with d1 assembled from homology maps induced by the cover inclusions.
template <Field F>
Page<F> first_page(const DoubleComplex<F>& dc, const ComputeOptions& opts = {});

/// d^r from the stored lifts: apply the total differential, read off the part
/// r columns to the left, and express it modulo B^r. Fills page.differentials.
template <Field F>
void compute_differentials(const DoubleComplex<F>& dc, Page<F>& page, const ComputeOptions& opts = {});

/// E^{r+1} as the homology of (E^r, d^r), with lifts corrected by zig-zag so
/// that d^{r+1} can be read off; the differentials of the new page are filled.
template <Field F>
Page<F> turn_page(const DoubleComplex<F>& dc, const Page<F>& page, const ComputeOptions& opts = {});

template <Field F>
class SpectralSequence {
public:
    SpectralSequence(DoubleComplex<F> dc, std::vector<Page<F>> pages, int converged_at)
        : dc_(std::move(dc)), pages_(std::move(pages)), converged_at_(converged_at) {}

    const DoubleComplex<F>& double_complex() const noexcept { return dc_; }
    const std::vector<Page<F>>& pages() const noexcept { return pages_; }
    /// E^r; pages past the last computed one equal E-infinity.
    const Page<F>& page(int r) const;
    const Page<F>& infinity() const { return pages_.back(); }
    int last_page() const { return pages_.back().r; }
    /// The first r with E^r = E-infinity, i.e. one more than the last page with a
    /// nonzero differential.
    int converged_at() const noexcept { return converged_at_; }

private:
    DoubleComplex<F> dc_;
    std::vector<Page<F>> pages_;
    int converged_at_;
};

/// Turns pages until no differential can be nonzero for bidegree reasons
/// (r > min(p-span, q_max + 1)) or every cell is zero.
template <Field F>
SpectralSequence<F> run_to_convergence(DoubleComplex<F> dc, const ComputeOptions& opts = {});

template <Field F>
SpectralSequence<F> anti_star_spectral_sequence(const SimplicialComplex& x, const F& field, bool augmented,
                                                const ComputeOptions& opts = {});

extern template class DoubleComplex<PrimeField>;
extern template class DoubleComplex<RationalField>;
extern template class SpectralSequence<PrimeField>;
extern template class SpectralSequence<RationalField>;

}  // namespace uberhom
