#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "ncp2/errors.hpp"
#include "ncp2/fields.hpp"
#include "ncp2/hesse.hpp"
#include "ncp2/sparse_rank.hpp"
#include "ncp2/subspace.hpp"

namespace ncp2 {

/// Quadratic algebra T(V)/(R): a free tensor algebra on the listed generators
/// modulo the two-sided ideal generated by a subspace R of V (x) V. Degree-two
/// tensors are indexed by words in lexicographic order, word (u,v) at column
/// u*n + v where n = dim V.
template <class F>
struct QuadraticAlgebra {
    F field;
    std::vector<std::string> generators;  ///< labels for a basis of V; n = size
    Subspace<F> relations;                ///< R in canonical form, ambient n^2
    std::vector<std::string> flags;       ///< advisory labels attached by constructors

    int num_generators() const { return static_cast<int>(generators.size()); }
};

/// Assembles a quadratic algebra from explicit degree-two relation spanning
/// vectors, each of length n^2 in the word basis.
template <class F>
QuadraticAlgebra<F> make_quadratic_algebra(const F& field,
                                           std::vector<std::string> generators,
                                           const std::vector<std::vector<typename F::Elt>>& span) {
    const int n = static_cast<int>(generators.size());
    if (n < 1) throw InvalidInputError("quadratic algebra needs at least one generator");
    for (const auto& row : span)
        if (static_cast<int>(row.size()) != n * n)
            throw InvalidInputError("relation vector length must equal n^2");
    auto r = Subspace<F>::from_span(field, n * n, span);
    return QuadraticAlgebra<F>{field, std::move(generators), std::move(r), {}};
}

/// Three-generator Sklyanin algebra S(a,b,c) = k<x,y,z>/(f1,f2,f3) with
///   f1 = a yz + b zy + c x^2,
///   f2 = a zx + b xz + c y^2,
///   f3 = a xy + b yx + c z^2.
/// Parameters are projective; scaling (a,b,c) leaves the relation span
/// unchanged. Parameters with abc = 0 and a^3+b^3+c^3 = 0 lie on every cubic
/// of the pencil, so the associated curve construction degenerates there; such
/// algebras are flagged "pencil-degenerate parameter" but still returned.
template <class F>
QuadraticAlgebra<F> sklyanin(const F& field, const typename F::Elt& a,
                             const typename F::Elt& b, const typename F::Elt& c) {
    using Elt = typename F::Elt;
    if (field.is_zero(a) && field.is_zero(b) && field.is_zero(c))
        throw InvalidInputError("Sklyanin parameters must not all vanish");
    const Elt zero = field.zero();
    // Word (u,v) with x=0, y=1, z=2 sits at column 3u+v.
    std::vector<std::vector<Elt>> span(3, std::vector<Elt>(9, zero));
    span[0][3 * 1 + 2] = a;  // yz
    span[0][3 * 2 + 1] = b;  // zy
    span[0][3 * 0 + 0] = c;  // xx
    span[1][3 * 2 + 0] = a;  // zx
    span[1][3 * 0 + 2] = b;  // xz
    span[1][3 * 1 + 1] = c;  // yy
    span[2][3 * 0 + 1] = a;  // xy
    span[2][3 * 1 + 0] = b;  // yx
    span[2][3 * 2 + 2] = c;  // zz
    auto alg = make_quadratic_algebra(field, {"x", "y", "z"}, span);
    const Elt abc = field.mul(a, field.mul(b, c));
    const Elt cubes = field.add(field.mul(a, field.mul(a, a)),
                                field.add(field.mul(b, field.mul(b, b)),
                                          field.mul(c, field.mul(c, c))));
    if (field.is_zero(abc) && field.is_zero(cubes))
        alg.flags.push_back("pencil-degenerate parameter");
    return alg;
}

/// Membership in the degenerate locus
///   Delta = {(a:b:c) : a^3 = b^3 = c^3} u {(1:0:0), (0:1:0), (0:0:1)}.
/// Decided exactly in the given field; over F_p with p = 1 mod 3 the cube
/// condition admits points whose integer lifts are outside Delta over Q.
template <class F>
bool in_delta(const F& field, const typename F::Elt& a, const typename F::Elt& b,
              const typename F::Elt& c) {
    const bool za = field.is_zero(a), zb = field.is_zero(b), zc = field.is_zero(c);
    if (za && zb && zc) throw InvalidInputError("(0,0,0) is not a projective point");
    const int zeros = int(za) + int(zb) + int(zc);
    if (zeros == 2) return true;  // coordinate point
    const auto cube = [&](const typename F::Elt& t) { return field.mul(t, field.mul(t, t)); };
    return field.eq(cube(a), cube(b)) && field.eq(cube(b), cube(c));
}

namespace detail {

/// Column budget for the degree-d word space n^d used by hilbert_dims.
/// Default 729 (= 3^6); override with the NCP2_WORKSPACE_CAP environment
/// variable (a positive integer).
inline long hilbert_workspace_cap() {
    const char* env = std::getenv("NCP2_WORKSPACE_CAP");
    if (env == nullptr || *env == '\0') return 729;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0)
        throw InvalidInputError("NCP2_WORKSPACE_CAP must be a positive integer");
    return v;
}

}  // namespace detail

/// Dimensions dim A_d for d = 0..N, where A = T(V)/(R) and
///   dim A_d = n^d - dim sum_i V^i (x) R (x) V^(d-2-i),
/// computed as an exact sparse rank over the algebra's field. Degrees with
/// n^d beyond the workspace cap raise a resource-cap error before any work.
template <class F>
std::vector<long> hilbert_dims(const QuadraticAlgebra<F>& alg, int max_degree) {
    if (max_degree < 0) throw InvalidInputError("hilbert_dims needs a degree N >= 0");
    const long n = alg.num_generators();
    const long cap = detail::hilbert_workspace_cap();
    long top = 1;
    for (int d = 1; d <= max_degree; ++d) {
        if (top > cap / n) {
            throw ResourceCapError("degree-" + std::to_string(d) + " word space " +
                                   std::to_string(n) + "^" + std::to_string(d) +
                                   " exceeds workspace cap " + std::to_string(cap));
        }
        top *= n;
    }

    std::vector<long> dims;
    dims.reserve(max_degree + 1);
    const auto& basis = alg.relations.basis;
    std::vector<long> pow(max_degree + 1, 1);
    for (int d = 1; d <= max_degree; ++d) pow[d] = pow[d - 1] * n;

    for (int d = 0; d <= max_degree; ++d) {
        if (d == 0) {
            dims.push_back(1);
            continue;
        }
        if (d == 1) {
            dims.push_back(n);
            continue;
        }
        std::vector<SparseRow<F>> rows;
        rows.reserve(static_cast<size_t>(d - 1) * basis.rows * pow[d - 2]);
        for (int i = 0; i <= d - 2; ++i) {
            const long left_count = pow[i];
            const long right_count = pow[d - 2 - i];
            for (long left = 0; left < left_count; ++left) {
                for (int r = 0; r < basis.rows; ++r) {
                    for (long right = 0; right < right_count; ++right) {
                        SparseRow<F> row;
                        for (int col = 0; col < basis.cols; ++col) {
                            const auto& v = basis.at(r, col);
                            if (alg.field.is_zero(v)) continue;
                            const long u = col / n, w = col % n;
                            const long word = ((left * n + u) * n + w) * right_count + right;
                            row.emplace_back(static_cast<int>(word), v);
                        }
                        if (!row.empty()) rows.push_back(std::move(row));
                    }
                }
            }
        }
        const int rk = rank_sparse(alg.field, std::move(rows));
        dims.push_back(pow[d] - rk);
    }
    return dims;
}

/// Alternating sums s_d - 3 s_(d-1) + 3 s_(d-2) - s_(d-3) (absent terms are
/// zero), one per input degree. A three-generator algebra with the Koszul
/// resolution 0 -> A(-3) -> A(-2)^3 -> A(-1)^3 -> A -> k -> 0 has sum 1 at
/// d = 0 and 0 afterwards.
inline std::vector<long> euler_alternating_sums(const std::vector<long>& dims) {
    std::vector<long> out(dims.size(), 0);
    for (size_t d = 0; d < dims.size(); ++d) {
        long s = dims[d];
        if (d >= 1) s -= 3 * dims[d - 1];
        if (d >= 2) s += 3 * dims[d - 2];
        if (d >= 3) s -= dims[d - 3];
        out[d] = s;
    }
    return out;
}

/// Per-degree verdicts of the regularity Euler check: degree d passes when
/// the alternating sum equals 1 for d = 0 and 0 otherwise.
inline std::vector<bool> as_regular_euler_check(const std::vector<long>& dims) {
    const auto sums = euler_alternating_sums(dims);
    std::vector<bool> out(dims.size(), false);
    for (size_t d = 0; d < dims.size(); ++d) out[d] = (sums[d] == (d == 0 ? 1 : 0));
    return out;
}

}  // namespace ncp2
