#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "uberhom/field.hpp"

namespace uberhom {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix. Column j of a linear map is the image of basis vector j.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    Vector<T> column(std::size_t c) const {
        Vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }
    void set_column(std::size_t c, const Vector<T>& v) {
        assert(v.size() == rows_);
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Ring R>
Matrix<typename R::value_type> zero_matrix(const R& ring, std::size_t rows, std::size_t cols) {
    return Matrix<typename R::value_type>(rows, cols, ring.zero());
}

template <Ring R>
Matrix<typename R::value_type> identity_matrix(const R& ring, std::size_t n) {
    auto m = zero_matrix(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

template <Ring R>
bool is_zero_matrix(const R& ring, const Matrix<typename R::value_type>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!ring.is_zero(m(r, c))) return false;
    return true;
}

template <Ring R>
bool is_zero_vector(const R& ring, const Vector<typename R::value_type>& v) {
    for (const auto& x : v)
        if (!ring.is_zero(x)) return false;
    return true;
}

template <Ring R>
Matrix<typename R::value_type> multiply(const R& ring, const Matrix<typename R::value_type>& a,
                                        const Matrix<typename R::value_type>& b) {
    assert(a.cols() == b.rows());
    auto out = zero_matrix(ring, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!ring.is_zero(b(k, j))) out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return out;
}

template <Ring R>
Vector<typename R::value_type> apply(const R& ring, const Matrix<typename R::value_type>& a,
                                     const Vector<typename R::value_type>& v) {
    assert(a.cols() == v.size());
    Vector<typename R::value_type> out(a.rows(), ring.zero());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (ring.is_zero(v[k])) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!ring.is_zero(a(i, k))) out[i] = ring.add(out[i], ring.mul(a(i, k), v[k]));
    }
    return out;
}

/// v += c * w, starting at index `from`.
template <Ring R>
void axpy(const R& ring, Vector<typename R::value_type>& v, const typename R::value_type& c,
          const Vector<typename R::value_type>& w, std::size_t from = 0) {
    if (v.size() < w.size()) v.resize(w.size(), ring.zero());
    for (std::size_t i = from; i < w.size(); ++i)
        if (!ring.is_zero(w[i])) v[i] = ring.add(v[i], ring.mul(c, w[i]));
}

/// Incremental row echelon form over a field, tracking how every stored row is
/// written in terms of the inserted generators. Pivots are the first nonzero
/// coordinate, so the result depends only on insertion order.
template <Field F>
class EchelonBasis {
public:
    using T = typename F::value_type;

    EchelonBasis(F field, std::size_t ambient_dim) : field_(std::move(field)), dim_(ambient_dim) {}

    const F& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t generator_count() const noexcept { return generators_; }

    /// Adds `v` as the next generator. Returns std::nullopt when `v` is independent of
    /// the earlier generators; otherwise the coefficients c with v = sum_i c_i g_i.
    std::optional<Vector<T>> insert(Vector<T> v) {
        assert(v.size() == dim_);
        const std::size_t id = generators_++;
        Vector<T> combo(id + 1, field_.zero());
        combo[id] = field_.one();
        reduce(v, combo);
        const auto pivot = first_nonzero(v);
        if (!pivot) {
            Vector<T> relation(id, field_.zero());
            for (std::size_t i = 0; i < id && i < combo.size(); ++i) relation[i] = field_.neg(combo[i]);
            return relation;
        }
        const T scale = field_.inv(v[*pivot]);
        for (auto& x : v) x = field_.mul(x, scale);
        for (auto& x : combo) x = field_.mul(x, scale);
        rows_.push_back(Row{std::move(v), *pivot, std::move(combo)});
        return std::nullopt;
    }

    /// Coefficients over all generators inserted so far, or nullopt if `v` is
    /// outside their span. Dependent generators always get coefficient zero.
    std::optional<Vector<T>> express(Vector<T> v) const {
        assert(v.size() == dim_);
        Vector<T> combo(generators_, field_.zero());
        for (const auto& row : rows_) {
            const T c = v[row.pivot];
            if (field_.is_zero(c)) continue;
            const T m = field_.neg(c);
            axpy(field_, v, m, row.vec, row.pivot);
            axpy(field_, combo, c, row.combo);
        }
        if (first_nonzero(v)) return std::nullopt;
        return combo;
    }

    bool contains(const Vector<T>& v) const { return express(v).has_value(); }

private:
    struct Row {
        Vector<T> vec;
        std::size_t pivot;
        Vector<T> combo;
    };

    void reduce(Vector<T>& v, Vector<T>& combo) const {
        for (const auto& row : rows_) {
            const T c = v[row.pivot];
            if (field_.is_zero(c)) continue;
            const T m = field_.neg(c);
            axpy(field_, v, m, row.vec, row.pivot);
            axpy(field_, combo, m, row.combo);
        }
    }

    std::optional<std::size_t> first_nonzero(const Vector<T>& v) const {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!field_.is_zero(v[i])) return i;
        return std::nullopt;
    }

    F field_;
    std::size_t dim_;
    std::size_t generators_ = 0;
    std::vector<Row> rows_;
};

template <Field F>
std::size_t rank(const F& field, const Matrix<typename F::value_type>& a) {
    EchelonBasis<F> echelon(field, a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c) echelon.insert(a.column(c));
    return echelon.rank();
}

/// Basis of the null space of `a`, one vector per dependent column (input order).
template <Field F>
std::vector<Vector<typename F::value_type>> kernel(const F& field, const Matrix<typename F::value_type>& a) {
    EchelonBasis<F> echelon(field, a.rows());
    std::vector<Vector<typename F::value_type>> out;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        auto relation = echelon.insert(a.column(c));
        if (!relation) continue;
        Vector<typename F::value_type> k(a.cols(), field.zero());
        for (std::size_t i = 0; i < relation->size(); ++i) k[i] = field.neg((*relation)[i]);
        k[c] = field.one();
        out.push_back(std::move(k));
    }
    return out;
}

/// Some x with a x = b, or nullopt.
template <Field F>
std::optional<Vector<typename F::value_type>> solve(const F& field, const Matrix<typename F::value_type>& a,
                                                   const Vector<typename F::value_type>& b) {
    EchelonBasis<F> echelon(field, a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c) echelon.insert(a.column(c));
    return echelon.express(b);
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

}  // namespace uberhom
