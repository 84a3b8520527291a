#pragma once

#include <utility>
#include <vector>

#include "ncp2/errors.hpp"
#include "ncp2/fields.hpp"

namespace ncp2 {

/// Dense row-major matrix over one of the exact fields. Dimensions are fixed
/// at construction; all entries live in the field carried by the object.
template <class F>
struct Matrix {
    using Elt = typename F::Elt;

    F field;
    int rows = 0;
    int cols = 0;
    std::vector<Elt> a;

    Matrix(const F& f, int r, int c)
        : field(f), rows(r), cols(c), a(checked_size(r, c), f.zero()) {}

    static size_t checked_size(int r, int c) {
        if (r < 0 || c < 0) throw InvalidInputError("negative matrix dimension");
        return static_cast<size_t>(r) * static_cast<size_t>(c);
    }

    Elt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    void check_same_field(const Matrix& o) const {
        if (!field.same_field(o.field)) throw FieldMismatchError("matrices over different fields");
    }

    bool operator==(const Matrix& o) const {
        if (!field.same_field(o.field) || rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!field.eq(a[i], o.a[i])) return false;
        return true;
    }

    static Matrix from_rows(const F& f, const std::vector<std::vector<Elt>>& r) {
        int nc = r.empty() ? 0 : static_cast<int>(r[0].size());
        Matrix m(f, static_cast<int>(r.size()), nc);
        for (size_t i = 0; i < r.size(); ++i) {
            if (static_cast<int>(r[i].size()) != nc) throw InvalidInputError("ragged matrix rows");
            for (int j = 0; j < nc; ++j) m.at(static_cast<int>(i), j) = r[i][j];
        }
        return m;
    }

    static Matrix identity(const F& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    std::vector<Elt> row(int i) const {
        return std::vector<Elt>(a.begin() + static_cast<size_t>(i) * cols,
                                a.begin() + static_cast<size_t>(i + 1) * cols);
    }

    Matrix transpose() const {
        Matrix t(field, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

/// Reduced row echelon form with deterministic pivoting: for each column in
/// order, the first row with a nonzero entry becomes the pivot row. Returns
/// the RREF together with the rank. Exact arithmetic, so no pivot-size
/// heuristics are involved; RREF itself is unique per row span.
template <class F>
std::pair<Matrix<F>, int> rref(Matrix<F> m) {
    const F& f = m.field;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        typename F::Elt scale = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), scale);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            typename F::Elt factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return {std::move(m), r};
}

template <class F>
int rank_of(const Matrix<F>& m) {
    return rref(m).second;
}

/// Determinant by elimination (square matrices; fields make this exact).
template <class F>
typename F::Elt determinant(Matrix<F> m) {
    if (m.rows != m.cols) throw InvalidInputError("determinant of non-square matrix");
    const F& f = m.field;
    typename F::Elt det = f.one();
    for (int c = 0; c < m.cols; ++c) {
        int pivot = -1;
        for (int i = c; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return f.zero();
        if (pivot != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(c, c));
        typename F::Elt scale = f.inv(m.at(c, c));
        for (int i = c + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, c))) continue;
            typename F::Elt factor = f.mul(m.at(i, c), scale);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
        }
    }
    return det;
}

/// Matrix product.
template <class F>
Matrix<F> mat_mul(const Matrix<F>& x, const Matrix<F>& y) {
    x.check_same_field(y);
    if (x.cols != y.rows) throw InvalidInputError("matrix product shape mismatch");
    const F& f = x.field;
    Matrix<F> z(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (f.is_zero(x.at(i, k))) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = f.add(z.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
        }
    return z;
}

/// Matrix-vector product.
template <class F>
std::vector<typename F::Elt> mat_vec(const Matrix<F>& m, const std::vector<typename F::Elt>& v) {
    if (m.cols != static_cast<int>(v.size())) throw InvalidInputError("matrix-vector shape mismatch");
    const F& f = m.field;
    std::vector<typename F::Elt> out(m.rows, f.zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!f.is_zero(m.at(i, j))) out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
    return out;
}

}  // namespace ncp2
