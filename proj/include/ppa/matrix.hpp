#pragma once

// Dense exact matrices over a field, reduced row echelon form, kernels,
// linear solves and canonical subspaces. Everything is small (desk scale),
// so storage is a plain row-major vector.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "ppa/errors.hpp"
#include "ppa/field.hpp"

namespace ppa {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Matrix whose rows are the given vectors (all of length `cols`).
    static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows) {
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw internal_error("ShapeMismatch", "row length differs from column count");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<F> row(std::size_t r) const {
        return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vec<F> col(std::size_t c) const {
        Vec<F> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [&](const Element& e) { return field_.is_zero(e); });
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw internal_error("ShapeMismatch", "vector length differs from column count");
        Vec<F> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!field_.is_zero(v[c])) out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
        return out;
    }

    Matrix scaled(const Element& s) const {
        Matrix m = *this;
        for (auto& e : m.data_) e = field_.mul(e, s);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw internal_error("ShapeMismatch", "matrix product shape mismatch");
        const F& f = a.field_;
        Matrix m(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& aik = a(i, k);
                if (f.is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = f.add(m(i, j), f.mul(aik, b(k, j)));
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
        return true;
    }

    /// Lexicographic order on (rows, cols, entries); used for canonical sorting.
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (a.field_.less(a.data_[i], b.data_[i])) return true;
            if (a.field_.less(b.data_[i], a.data_[i])) return false;
        }
        return false;
    }

    /// Rows [r0, r1) by columns [c0, c1).
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        Matrix m(field_, r1 - r0, c1 - c0);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c) m(r - r0, c - c0) = (*this)(r, c);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    static Matrix vstack(const F& field, std::size_t cols, const std::vector<Matrix>& parts) {
        std::size_t total = 0;
        for (const auto& p : parts) total += p.rows_;
        Matrix m(field, total, cols);
        std::size_t at = 0;
        for (const auto& p : parts) {
            if (p.cols_ != cols) throw internal_error("ShapeMismatch", "vstack column mismatch");
            m.set_block(at, 0, p);
            at += p.rows_;
        }
        return m;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw internal_error("ShapeMismatch", "matrix sum shape mismatch");
    }

    F field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

/// Entrywise reduction of a rational matrix into another field.
template <class G>
Matrix<G> reduce_matrix(const Matrix<Rationals>& m, const G& field) {
    Matrix<G> out(field, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = field.from_rational(m(r, c));
    return out;
}

template <class F>
struct Echelon {
    Matrix<F> reduced;                // rank x cols, reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form with the earliest available column as pivot.
/// Zero rows are dropped, so the result is canonical for the row space.
template <class F>
Echelon<F> rref(Matrix<F> m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(r, k));
        auto inv = f.inv(m(r, c));
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            auto factor = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {m.block(0, r, 0, m.cols()), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank();
}

/// Rows form the canonical (RREF) basis of {x : m x = 0}.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<F>> vecs;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<F> x(m.cols(), f.zero());
        x[free] = f.one();
        for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = f.neg(e.reduced(r, free));
        vecs.push_back(std::move(x));
    }
    return rref(Matrix<F>::from_rows(f, m.cols(), vecs)).reduced;
}

/// Some x with a x = b (free variables set to zero), or nullopt.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
    const F& f = a.field();
    if (b.size() != a.rows()) throw internal_error("ShapeMismatch", "rhs length differs from row count");
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
    auto e = rref(aug);
    Vec<F> x(a.cols(), f.zero());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    const F& f = a.field();
    const std::size_t n = a.rows();
    if (a.cols() != n) throw internal_error("ShapeMismatch", "inverse of non-square matrix");
    Matrix<F> aug(f, n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix<F>::identity(f, n));
    auto e = rref(aug);
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.block(0, n, n, 2 * n);
}

/// A linear subspace of F^n stored by its canonical RREF basis (as rows).
/// Equality of subspaces is equality of these canonical forms.
template <class F>
class Subspace {
public:
    using Element = typename F::Element;

    Subspace(const F& field, std::size_t ambient) : basis_(field, 0, ambient) {}

    static Subspace span(const Matrix<F>& rows) {
        Subspace s(rows.field(), rows.cols());
        auto e = rref(rows);
        s.basis_ = std::move(e.reduced);
        s.pivots_ = std::move(e.pivots);
        return s;
    }
    static Subspace span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
        return span(Matrix<F>::from_rows(field, ambient, vectors));
    }
    static Subspace full(const F& field, std::size_t ambient) {
        return span(Matrix<F>::identity(field, ambient));
    }

    const F& field() const { return basis_.field(); }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec<F> vector(std::size_t k) const { return basis_.row(k); }

    std::vector<std::size_t> non_pivots() const {
        std::vector<std::size_t> out;
        std::size_t k = 0;
        for (std::size_t c = 0; c < ambient_dim(); ++c) {
            if (k < pivots_.size() && pivots_[k] == c) {
                ++k;
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    /// v minus its component along the basis; zero at every pivot.
    Vec<F> reduce(Vec<F> v) const {
        const F& f = field();
        for (std::size_t r = 0; r < dim(); ++r) {
            auto coeff = v[pivots_[r]];
            if (f.is_zero(coeff)) continue;
            for (std::size_t c = 0; c < ambient_dim(); ++c) v[c] = f.sub(v[c], f.mul(coeff, basis_(r, c)));
        }
        return v;
    }

    bool contains(const Vec<F>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [&](const Element& e) { return field().is_zero(e); });
    }

    bool contains(const Subspace& other) const {
        for (std::size_t k = 0; k < other.dim(); ++k)
            if (!contains(other.vector(k))) return false;
        return true;
    }

    /// Coordinates of v (assumed to lie in the subspace) in the canonical basis.
    Vec<F> coordinates(const Vec<F>& v) const {
        Vec<F> out;
        out.reserve(dim());
        for (auto p : pivots_) out.push_back(v[p]);
        return out;
    }

    Subspace sum(const Subspace& other) const {
        return span(Matrix<F>::vstack(field(), ambient_dim(), {basis_, other.basis_}));
    }

    /// Rows spanning {y : y . x = 0 for all x in the subspace}.
    Matrix<F> annihilator() const { return kernel_basis(basis_); }

    Subspace intersect(const Subspace& other) const {
        auto eqs = Matrix<F>::vstack(field(), ambient_dim(), {annihilator(), other.annihilator()});
        return span(kernel_basis(eqs));
    }

    /// Image under the linear map a (acting on column vectors).
    Subspace image(const Matrix<F>& a) const {
        if (a.cols() != ambient_dim()) throw internal_error("ShapeMismatch", "image: map domain mismatch");
        return span((a * basis_.transpose()).transpose());
    }

    /// {x in F^n : a x lies in target}.
    static Subspace preimage(const Matrix<F>& a, const Subspace& target) {
        if (a.rows() != target.ambient_dim()) throw internal_error("ShapeMismatch", "preimage: codomain mismatch");
        return span(kernel_basis(target.annihilator() * a));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

private:
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace ppa
