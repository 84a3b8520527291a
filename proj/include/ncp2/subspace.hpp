#pragma once

#include <vector>

#include "ncp2/matrix.hpp"

namespace ncp2 {

/// Linear subspace of k^n in canonical form: the basis is the reduced row
/// echelon form of any spanning set, with zero rows dropped. Two subspaces
/// are equal iff their canonical bases are entry-wise equal.
template <class F>
struct Subspace {
    using Elt = typename F::Elt;

    F field;
    int ambient = 0;
    Matrix<F> basis;  ///< RREF, no zero rows; basis.rows == dim

    Subspace(const F& f, int n) : field(f), ambient(n), basis(f, 0, n) {}

    int dim() const { return basis.rows; }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }

    /// Canonicalizes a spanning set of row vectors.
    static Subspace from_span(const F& f, int n, const std::vector<std::vector<Elt>>& rows) {
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != n)
                throw InvalidInputError("spanning vector has wrong ambient dimension");
        auto [m, rank] = rref(Matrix<F>::from_rows(f, rows));
        Subspace s(f, n);
        s.basis = Matrix<F>(f, rank, n);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < n; ++j) s.basis.at(i, j) = m.at(i, j);
        return s;
    }

    static Subspace full(const F& f, int n) {
        Subspace s(f, n);
        s.basis = Matrix<F>::identity(f, n);
        return s;
    }

    /// Membership test: reducing v against the canonical basis leaves zero.
    bool contains(const std::vector<Elt>& v) const {
        if (static_cast<int>(v.size()) != ambient)
            throw InvalidInputError("vector has wrong ambient dimension");
        const F& f = field;
        std::vector<Elt> w = v;
        for (int i = 0; i < basis.rows; ++i) {
            int lead = -1;
            for (int j = 0; j < ambient; ++j)
                if (!f.is_zero(basis.at(i, j))) {
                    lead = j;
                    break;
                }
            if (lead < 0 || f.is_zero(w[lead])) continue;
            Elt factor = w[lead];
            for (int j = 0; j < ambient; ++j)
                w[j] = f.sub(w[j], f.mul(factor, basis.at(i, j)));
        }
        for (const auto& x : w)
            if (!f.is_zero(x)) return false;
        return true;
    }
};

/// Right kernel of m, i.e. {v : m v = 0}, as a canonical Subspace of k^cols.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    const F& f = m.field;
    auto [r, rank] = rref(m);
    std::vector<int> pivots;  // pivot column of each nonzero row
    std::vector<bool> is_pivot(m.cols, false);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!f.is_zero(r.at(i, j))) {
                pivots.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<std::vector<typename F::Elt>> rows;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Elt> v(m.cols, f.zero());
        v[free] = f.one();
        for (int i = 0; i < rank; ++i) v[pivots[i]] = f.neg(r.at(i, free));
        rows.push_back(std::move(v));
    }
    return Subspace<F>::from_span(f, m.cols, rows);
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient != b.ambient) throw InvalidInputError("subspace sum: ambient mismatch");
    std::vector<std::vector<typename F::Elt>> rows;
    for (int i = 0; i < a.basis.rows; ++i) rows.push_back(a.basis.row(i));
    for (int i = 0; i < b.basis.rows; ++i) rows.push_back(b.basis.row(i));
    return Subspace<F>::from_span(a.field, a.ambient, rows);
}

/// Exact intersection. Solutions of A^T y = B^T z give the common vectors
/// A^T y; the kernel of the stacked matrix [A^T | -B^T] enumerates them.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient != b.ambient) throw InvalidInputError("subspace intersection: ambient mismatch");
    const F& f = a.field;
    int n = a.ambient, ra = a.dim(), rb = b.dim();
    Matrix<F> m(f, n, ra + rb);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < n; ++j) m.at(j, i) = a.basis.at(i, j);
    for (int i = 0; i < rb; ++i)
        for (int j = 0; j < n; ++j) m.at(j, ra + i) = f.neg(b.basis.at(i, j));
    Subspace<F> yz = kernel(m);
    std::vector<std::vector<typename F::Elt>> rows;
    for (int k = 0; k < yz.dim(); ++k) {
        std::vector<typename F::Elt> v(n, f.zero());
        for (int i = 0; i < ra; ++i) {
            const auto& y = yz.basis.at(k, i);
            if (f.is_zero(y)) continue;
            for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(y, a.basis.at(i, j)));
        }
        rows.push_back(std::move(v));
    }
    return Subspace<F>::from_span(f, n, rows);
}

namespace detail {
inline void k_subsets(int n, int k, std::vector<int>& cur, int start,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        k_subsets(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All k-element subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> lex_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::k_subsets(n, k, cur, 0, out);
    return out;
}

/// Pluecker coordinates of a k-dimensional subspace of k^n: the C(n,k)
/// maximal minors of the canonical basis, in lexicographic column-subset
/// order, scaled so the first nonzero coordinate is 1. This makes equality
/// of Grassmannian points decidable by direct comparison.
template <class F>
std::vector<typename F::Elt> plucker(const Subspace<F>& s) {
    const F& f = s.field;
    int k = s.dim(), n = s.ambient;
    if (k == 0) throw InvalidInputError("Pluecker coordinates of the zero subspace");
    std::vector<typename F::Elt> out;
    for (const auto& cols : lex_subsets(n, k)) {
        Matrix<F> sub(f, k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = s.basis.at(i, cols[j]);
        out.push_back(determinant(sub));
    }
    for (const auto& x : out) {
        if (f.is_zero(x)) continue;
        typename F::Elt scale = f.inv(x);
        for (auto& y : out) y = f.mul(y, scale);
        break;
    }
    return out;
}

}  // namespace ncp2
