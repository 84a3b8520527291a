#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ncp2/cubic_invariants.hpp"
#include "ncp2/fields.hpp"
#include "ncp2/hesse.hpp"
#include "ncp2/matrix.hpp"
#include "ncp2/poly.hpp"
#include "ncp2/subspace.hpp"

namespace ncp2 {

/// A 3x3x3 tensor in V0 (x) V1 (x) V2, stored row-major at index 9i+3j+k.
/// Axis 0 indexes the V0 basis, axis 1 the V1 basis, axis 2 the V2 basis.
template <class F>
struct Tensor333 {
    using Elt = typename F::Elt;

    F field;
    std::vector<Elt> a;

    explicit Tensor333(const F& f) : field(f), a(27, f.zero()) {}

    static int index(int i, int j, int k) { return 9 * i + 3 * j + k; }

    Elt& at(int i, int j, int k) { return a[index(i, j, k)]; }
    const Elt& at(int i, int j, int k) const { return a[index(i, j, k)]; }

    bool is_zero() const {
        for (const auto& v : a)
            if (!field.is_zero(v)) return false;
        return true;
    }

    bool operator==(const Tensor333& o) const {
        if (!field.same_field(o.field)) return false;
        for (int t = 0; t < 27; ++t)
            if (!field.eq(a[t], o.a[t])) return false;
        return true;
    }
    bool operator!=(const Tensor333& o) const { return !(*this == o); }
};

template <class F>
Tensor333<F> tensor_add(const Tensor333<F>& s, const Tensor333<F>& t) {
    if (!s.field.same_field(t.field)) throw FieldMismatchError("tensor sum across fields");
    Tensor333<F> out(s.field);
    for (int i = 0; i < 27; ++i) out.a[i] = s.field.add(s.a[i], t.a[i]);
    return out;
}

template <class F>
Tensor333<F> tensor_scale(const Tensor333<F>& t, const typename F::Elt& c) {
    Tensor333<F> out(t.field);
    for (int i = 0; i < 27; ++i) out.a[i] = t.field.mul(t.a[i], c);
    return out;
}

/// The normal form N_{u,v,w}: w on the diagonal slots (i,i,i), u on the
/// cyclic slots (0,2,1),(1,0,2),(2,1,0), v on the cyclic slots
/// (0,1,2),(1,2,0),(2,0,1). Linear in (u,v,w); rejects (0,0,0).
template <class F>
Tensor333<F> normal_form(const F& f, const typename F::Elt& u, const typename F::Elt& v,
                         const typename F::Elt& w) {
    if (f.is_zero(u) && f.is_zero(v) && f.is_zero(w))
        throw InvalidInputError("normal form of the zero parameter");
    Tensor333<F> t(f);
    t.at(0, 0, 0) = w;
    t.at(1, 1, 1) = w;
    t.at(2, 2, 2) = w;
    t.at(0, 2, 1) = u;
    t.at(1, 0, 2) = u;
    t.at(2, 1, 0) = u;
    t.at(0, 1, 2) = v;
    t.at(1, 2, 0) = v;
    t.at(2, 0, 1) = v;
    return t;
}

/// Contraction of the tensor with a covector plugged into one axis: the
/// resulting 3x3 matrix is indexed by the two remaining axes in order.
template <class F>
Matrix<F> contract(const Tensor333<F>& t, int axis, const std::array<typename F::Elt, 3>& phi) {
    const F& f = t.field;
    if (axis < 0 || axis > 2) throw InvalidInputError("tensor axis out of range");
    bool zero = true;
    for (const auto& c : phi)
        if (!f.is_zero(c)) zero = false;
    if (zero) throw InvalidInputError("contraction by the zero covector");
    Matrix<F> m(f, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const auto& v = t.at(i, j, k);
                if (axis == 0)
                    m.at(j, k) = f.add(m.at(j, k), f.mul(phi[i], v));
                else if (axis == 1)
                    m.at(i, k) = f.add(m.at(i, k), f.mul(phi[j], v));
                else
                    m.at(i, j) = f.add(m.at(i, j), f.mul(phi[k], v));
            }
    return m;
}

/// Contraction with the n-th basis covector of the chosen axis.
template <class F>
Matrix<F> slice(const Tensor333<F>& t, int axis, int n) {
    if (n < 0 || n > 2) throw InvalidInputError("slice index out of range");
    std::array<typename F::Elt, 3> phi{t.field.zero(), t.field.zero(), t.field.zero()};
    phi[n] = t.field.one();
    return contract(t, axis, phi);
}

/// The 3x3 matrix of linear forms M(x) in the coordinates of the chosen
/// axis: entry (j,k) of the axis-0 matrix is sum_i T[i][j][k] x_i, and
/// cyclically for the other axes.
template <class F>
std::array<std::array<Poly<F>, 3>, 3> matrix_of_linear_forms(const Tensor333<F>& t, int axis) {
    const F& f = t.field;
    if (axis < 0 || axis > 2) throw InvalidInputError("tensor axis out of range");
    Poly<F> z(f, 3);
    std::array<std::array<Poly<F>, 3>, 3> m{{{z, z, z}, {z, z, z}, {z, z, z}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const auto& v = t.at(i, j, k);
                if (f.is_zero(v)) continue;
                std::vector<int> e(3, 0);
                if (axis == 0) {
                    e[i] = 1;
                    m[j][k].add_term(e, v);
                } else if (axis == 1) {
                    e[j] = 1;
                    m[i][k].add_term(e, v);
                } else {
                    e[k] = 1;
                    m[i][j].add_term(e, v);
                }
            }
    return m;
}

/// Determinant of M(x): a cubic form in the chosen axis coordinates.
template <class F>
Poly<F> det_cubic(const Tensor333<F>& t, int axis = 0) {
    if (t.is_zero()) throw InvalidInputError("determinantal cubic of the zero tensor");
    return det3_linear(matrix_of_linear_forms(t, axis), {0, 1, 2});
}

/// The three axis-2 derivative slices as bidegree-(1,1) forms on V0 x V1
/// in the six variables (x0,y0,z0,x1,y1,z1): form k is
/// sum_{i,j} T[i][j][k] (axis0 var i)(axis1 var j).
template <class F>
std::array<Poly<F>, 3> derivative_forms(const Tensor333<F>& t) {
    const F& f = t.field;
    Poly<F> z(f, 6);
    std::array<Poly<F>, 3> out{z, z, z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const auto& v = t.at(i, j, k);
                if (f.is_zero(v)) continue;
                std::vector<int> e(6, 0);
                e[i] = 1;
                e[3 + j] = 1;
                out[k].add_term(e, v);
            }
    return out;
}

namespace detail {

/// Canonical representatives of the projective plane over F_p in scan order.
inline std::vector<std::array<std::uint64_t, 3>> projective_covectors(const PrimeField& f) {
    std::vector<std::array<std::uint64_t, 3>> out;
    for (std::uint64_t a = 0; a < f.p; ++a)
        for (std::uint64_t b = 0; b < f.p; ++b) out.push_back({1, a, b});
    for (std::uint64_t b = 0; b < f.p; ++b) out.push_back({0, 1, b});
    out.push_back({0, 0, 1});
    return out;
}

inline std::uint64_t reduce_int(const Int& n, std::uint64_t p) {
    return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

/// Scales the 27 rational entries to integers and divides by the content,
/// so that no prime divides every entry.
inline std::array<Int, 27> primitive_integer_entries(const std::vector<Rat>& vals) {
    Int l = 1;
    for (const auto& r : vals) l = lcm(l, r.get_den());
    std::vector<Int> scaled;
    for (const auto& r : vals) scaled.push_back(r.get_num() * (l / r.get_den()));
    Int g = 0;
    for (const auto& n : scaled) g = gcd(g, n);
    std::array<Int, 27> out;
    for (int i = 0; i < 27; ++i) out[i] = g != 0 ? Int(scaled[i] / g) : scaled[i];
    return out;
}

}  // namespace detail

/// Exhaustive geometricity scan over a finite prime field: true iff no
/// nonzero covector on any axis contracts to a matrix of rank at most one.
inline bool is_geometric_scan(const Tensor333<PrimeField>& t) {
    if (t.is_zero()) throw InvalidInputError("geometricity of the zero tensor");
    auto covs = detail::projective_covectors(t.field);
    for (int axis = 0; axis < 3; ++axis)
        for (const auto& phi : covs)
            if (rank_of(contract(t, axis, phi)) <= 1) return false;
    return true;
}

inline bool is_geometric(const Tensor333<PrimeField>& t) { return is_geometric_scan(t); }

/// Geometricity over Q: the primitive integer entries are reduced modulo
/// 7, 13 and 19 and each reduction is scanned exhaustively; the verdicts
/// must agree, otherwise the test is inconclusive.
inline bool is_geometric(const Tensor333<RationalField>& t) {
    if (t.is_zero()) throw InvalidInputError("geometricity of the zero tensor");
    std::vector<Rat> vals(t.a.begin(), t.a.end());
    auto ints = detail::primitive_integer_entries(vals);
    std::optional<bool> verdict;
    for (std::uint64_t p : {7ull, 13ull, 19ull}) {
        PrimeField f(p);
        Tensor333<PrimeField> tp(f);
        for (int i = 0; i < 27; ++i) tp.a[i] = detail::reduce_int(ints[i], p);
        bool g = is_geometric_scan(tp);
        if (verdict && *verdict != g)
            throw InternalInconsistencyError("geometricity scans disagree across primes");
        verdict = g;
    }
    return *verdict;
}

/// Geometricity over Q(w): entries a + b w reduce modulo each scan prime p
/// (all chosen with p = 1 mod 3) by sending w to a cube root of unity mod p.
inline bool is_geometric(const Tensor333<CyclotomicField>& t) {
    if (t.is_zero()) throw InvalidInputError("geometricity of the zero tensor");
    std::vector<Rat> vals;
    for (const auto& c : t.a) {
        vals.push_back(c.a);
        vals.push_back(c.b);
    }
    Int l = 1;
    for (const auto& r : vals) l = lcm(l, r.get_den());
    std::vector<Int> scaled;
    for (const auto& r : vals) scaled.push_back(r.get_num() * (l / r.get_den()));
    Int g = 0;
    for (const auto& n : scaled) g = gcd(g, n);
    if (g != 0)
        for (auto& n : scaled) n /= g;
    std::optional<bool> verdict;
    for (std::uint64_t p : {7ull, 13ull, 19ull}) {
        PrimeField f(p);
        std::uint64_t w = f.omega();
        Tensor333<PrimeField> tp(f);
        for (int i = 0; i < 27; ++i) {
            std::uint64_t ra = detail::reduce_int(scaled[2 * i], p);
            std::uint64_t rb = detail::reduce_int(scaled[2 * i + 1], p);
            tp.a[i] = f.add(ra, f.mul(rb, w));
        }
        bool verdict_p = is_geometric_scan(tp);
        if (verdict && *verdict != verdict_p)
            throw InternalInconsistencyError("geometricity scans disagree across primes");
        verdict = verdict_p;
    }
    return *verdict;
}

/// The triple attached to a tensor: the determinantal cubic on factor 0,
/// the three bidegree-(1,1) forms cutting the graph inside P2 x P2, the
/// two line-bundle markers, and (on a smooth curve) the translation point
/// q recovered from the rank-2 system M(o) and its negation marker p.
template <class F>
struct TripleModel {
    Poly<F> curve_cubic;
    std::array<Poly<F>, 3> forms;
    std::string marker_l0 = "pullback of O(1) from factor 0";
    std::string marker_l1 = "pullback of O(1) from factor 1";
    bool curve_smooth = false;
    std::optional<std::array<typename F::Elt, 3>> translation_q;
    std::optional<std::array<typename F::Elt, 3>> marker_p;
};

template <class F>
TripleModel<F> triple_of_tensor(const Tensor333<F>& t) {
    const F& f = t.field;
    if (t.is_zero()) throw InvalidInputError("triple of the zero tensor");
    Poly<F> det = det_cubic(t, 0);
    if (det.is_zero())
        throw InvalidInputError("no determinantal curve: det M(x) vanishes identically");
    if (!is_geometric(t)) throw InvalidInputError("tensor is not geometric");

    TripleModel<F> out{det, derivative_forms(t)};
    out.curve_smooth = cubic_is_smooth(det);
    if (!out.curve_smooth) return out;

    // M(o) with o = (1:-1:0): rows indexed by V2, columns by V1. Its kernel
    // is the image of the origin under the translation the tensor encodes.
    Matrix<F> m(f, 3, 3);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) m.at(k, j) = f.sub(t.at(0, j, k), t.at(1, j, k));
    Subspace<F> ker = kernel(m);
    if (ker.dim() != 1)
        throw InternalInconsistencyError("translation system at the origin is not rank 2");
    std::array<typename F::Elt, 3> q =
        canonical_proj<F>(f, {ker.basis.at(0, 0), ker.basis.at(0, 1), ker.basis.at(0, 2)});
    if (!f.is_zero(det.eval({q[0], q[1], q[2]})))
        throw InternalInconsistencyError("recovered translation point is off the curve");
    out.translation_q = q;
    out.marker_p = canonical_proj<F>(f, {q[1], q[0], q[2]});
    return out;
}

/// The relation subspace: the image of V2* -> V0 (x) V1 under axis-2
/// contraction, flattened at index 3i+j. Must be 3-dimensional.
template <class F>
Subspace<F> relation_subspace(const Tensor333<F>& t) {
    const F& f = t.field;
    if (t.is_zero()) throw InvalidInputError("relation subspace of the zero tensor");
    std::vector<std::vector<typename F::Elt>> rows;
    for (int k = 0; k < 3; ++k) {
        std::vector<typename F::Elt> r(9, f.zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[3 * i + j] = t.at(i, j, k);
        rows.push_back(r);
    }
    Subspace<F> s = Subspace<F>::from_span(f, 9, rows);
    if (s.dim() != 3)
        throw InvalidInputError("tensor does not define a relation point of the Grassmannian");
    return s;
}

/// Reconstructs the tensor line from a parameter point p on a smooth
/// member: with R0 the axis-2 derivative span of N_p in V0 (x) V1 and R1
/// the axis-0 derivative span in V1 (x) V2, the intersection
/// (R0 (x) V2) meet (V0 (x) R1) inside the 27-dimensional space must be a
/// line; its canonical representative is returned.
template <class F>
Tensor333<F> quadruple_of_triple(const HParamPoint<F>& p) {
    const F& f = p.field;
    HesseCurve<F> member = member_through(p);
    if (!is_smooth_member(member))
        throw InvalidInputError("quadruple reconstruction requires a smooth member");
    Tensor333<F> n = normal_form(f, p.x[0], p.x[1], p.x[2]);

    std::vector<std::vector<typename F::Elt>> r0_rows, r1_rows;
    for (int k = 0; k < 3; ++k) {
        std::vector<typename F::Elt> r(9, f.zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[3 * i + j] = n.at(i, j, k);
        r0_rows.push_back(r);
    }
    for (int i = 0; i < 3; ++i) {
        std::vector<typename F::Elt> r(9, f.zero());
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[3 * j + k] = n.at(i, j, k);
        r1_rows.push_back(r);
    }
    Subspace<F> r0 = Subspace<F>::from_span(f, 9, r0_rows);
    Subspace<F> r1 = Subspace<F>::from_span(f, 9, r1_rows);

    std::vector<std::vector<typename F::Elt>> big0, big1;
    for (int r = 0; r < r0.dim(); ++r)
        for (int k = 0; k < 3; ++k) {
            std::vector<typename F::Elt> v(27, f.zero());
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) v[9 * i + 3 * j + k] = r0.basis.at(r, 3 * i + j);
            big0.push_back(v);
        }
    for (int r = 0; r < r1.dim(); ++r)
        for (int i = 0; i < 3; ++i) {
            std::vector<typename F::Elt> v(27, f.zero());
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) v[9 * i + 3 * j + k] = r1.basis.at(r, 3 * j + k);
            big1.push_back(v);
        }
    Subspace<F> inter = subspace_intersect(Subspace<F>::from_span(f, 27, big0),
                                           Subspace<F>::from_span(f, 27, big1));
    if (inter.dim() != 1)
        throw InternalInconsistencyError("tensor-line intersection is not one-dimensional");
    Tensor333<F> out(f);
    for (int i = 0; i < 27; ++i) out.a[i] = inter.basis.at(0, i);
    return out;
}

enum class Stability {
    stable,
    not_stable_det_degenerate,
    not_stable_singular_curve,
    not_geometric,
};

inline std::string stability_label(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::not_stable_det_degenerate: return "not-stable: det-degenerate";
        case Stability::not_stable_singular_curve: return "not-stable: singular-curve";
        case Stability::not_geometric: return "not-geometric";
    }
    throw InternalInconsistencyError("unhandled stability label");
}

/// Stability classification: a vanishing determinantal cubic is the
/// degenerate (Veronese-type) locus; a singular nonzero cubic is the
/// triangle-type boundary; a smooth cubic is stable exactly when the
/// tensor is geometric. No semistable-versus-unstable refinement is made.
template <class F>
Stability classify_stability(const Tensor333<F>& t) {
    if (t.is_zero()) throw InvalidInputError("stability of the zero tensor");
    Poly<F> det = det_cubic(t, 0);
    if (det.is_zero()) return Stability::not_stable_det_degenerate;
    if (!cubic_is_smooth(det)) return Stability::not_stable_singular_curve;
    return is_geometric(t) ? Stability::stable : Stability::not_geometric;
}

/// The tensor moved by a triple of basis changes, one per factor:
/// T'[a][b][c] = sum g0(a,i) g1(b,j) g2(c,k) T[i][j][k].
template <class F>
Tensor333<F> basis_change(const Tensor333<F>& t, const Matrix<F>& g0, const Matrix<F>& g1,
                          const Matrix<F>& g2) {
    const F& f = t.field;
    for (const auto* g : {&g0, &g1, &g2})
        if (g->rows != 3 || g->cols != 3) throw InvalidInputError("basis change must be 3x3");
    Tensor333<F> out(f);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                typename F::Elt s = f.zero();
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        for (int k = 0; k < 3; ++k)
                            s = f.add(s, f.mul(f.mul(g0.at(a, i), g1.at(b, j)),
                                               f.mul(g2.at(c, k), t.at(i, j, k))));
                out.at(a, b, c) = s;
            }
    return out;
}

}  // namespace ncp2
