#pragma once

#include <array>
#include <optional>

#include "ncp2/matrix.hpp"
#include "ncp2/poly.hpp"
#include "ncp2/subspace.hpp"

namespace ncp2 {

/// Scales a projective coordinate triple so its first nonzero entry is 1.
/// Canonical scaling makes point equality a structural comparison.
template <class F>
std::array<typename F::Elt, 3> canonical_proj(const F& f, std::array<typename F::Elt, 3> x) {
    for (const auto& c : x) {
        if (f.is_zero(c)) continue;
        typename F::Elt s = f.inv(c);
        for (auto& y : x) y = f.mul(y, s);
        return x;
    }
    throw InvalidInputError("projective point with all coordinates zero");
}

/// A projective parameter point (u:v:w), canonically scaled.
template <class F>
struct HParamPoint {
    F field;
    std::array<typename F::Elt, 3> x;

    HParamPoint(const F& f, const std::array<typename F::Elt, 3>& coords)
        : field(f), x(canonical_proj(f, coords)) {}

    bool operator==(const HParamPoint& o) const {
        if (!field.same_field(o.field)) return false;
        for (int i = 0; i < 3; ++i)
            if (!field.eq(x[i], o.x[i])) return false;
        return true;
    }
};

/// A member of the pencil t0 (x^3+y^3+z^3) + t1 xyz = 0, with (t0:t1)
/// canonically scaled and the cubic stored explicitly.
template <class F>
struct HesseCurve {
    using Elt = typename F::Elt;

    F field;
    Elt t0, t1;
    Poly<F> cubic;

    HesseCurve(const F& f, const Elt& a0, const Elt& a1) : field(f), t0(a0), t1(a1), cubic(f, 3) {
        if (f.is_zero(t0) && f.is_zero(t1))
            throw InvalidInputError("pencil parameters (0:0) do not define a curve");
        std::array<Elt, 3> scaled = canonical_proj<F>(f, {t0, t1, f.zero()});
        t0 = scaled[0];
        t1 = scaled[1];
        cubic.add_term({3, 0, 0}, t0);
        cubic.add_term({0, 3, 0}, t0);
        cubic.add_term({0, 0, 3}, t0);
        cubic.add_term({1, 1, 1}, t1);
    }

    bool same_curve(const HesseCurve& o) const {
        return field.same_field(o.field) && field.eq(t0, o.t0) && field.eq(t1, o.t1);
    }

    Elt value_at(const std::array<Elt, 3>& p) const {
        return cubic.eval({p[0], p[1], p[2]});
    }

    bool contains(const std::array<Elt, 3>& p) const { return field.is_zero(value_at(p)); }
};

/// A point on a specific pencil member, canonically scaled; construction
/// validates the curve equation.
template <class F>
struct CurvePoint {
    using Elt = typename F::Elt;

    F field;
    Elt t0, t1;  ///< parent curve parameters (canonical)
    std::array<Elt, 3> x;

    CurvePoint(const HesseCurve<F>& c, const std::array<Elt, 3>& coords)
        : field(c.field), t0(c.t0), t1(c.t1), x(canonical_proj(c.field, coords)) {
        if (!c.contains(x)) throw InvalidInputError("point does not satisfy the curve equation");
    }

    bool on_same_curve(const CurvePoint& o) const {
        return field.same_field(o.field) && field.eq(t0, o.t0) && field.eq(t1, o.t1);
    }

    bool operator==(const CurvePoint& o) const {
        if (!on_same_curve(o)) return false;
        for (int i = 0; i < 3; ++i)
            if (!field.eq(x[i], o.x[i])) return false;
        return true;
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
};

/// The unique pencil member through p: (t0 : t1) = (uvw : -(u^3+v^3+w^3)).
/// Both coordinates vanish exactly at the nine base points, which lie on
/// every member and determine none.
template <class F>
HesseCurve<F> member_through(const HParamPoint<F>& p) {
    const F& f = p.field;
    const auto& u = p.x;
    typename F::Elt t0 = f.mul(f.mul(u[0], u[1]), u[2]);
    typename F::Elt cubes = f.zero();
    for (int i = 0; i < 3; ++i) cubes = f.add(cubes, f.mul(f.mul(u[i], u[i]), u[i]));
    typename F::Elt t1 = f.neg(cubes);
    if (f.is_zero(t0) && f.is_zero(t1))
        throw InvalidInputError("base point of the pencil: member is not determined");
    return HesseCurve<F>(f, t0, t1);
}

/// The pencil degenerates to a triangle of lines exactly at (0:1) and the
/// three parameters with t1^3 = -27 t0^3; the cubic equation decides this in
/// any coefficient field without needing cube roots of unity.
template <class F>
bool is_smooth_member(const HesseCurve<F>& c) {
    const F& f = c.field;
    if (f.is_zero(c.t0)) return false;
    typename F::Elt t13 = f.mul(f.mul(c.t1, c.t1), c.t1);
    typename F::Elt t03 = f.mul(f.mul(c.t0, c.t0), c.t0);
    return !f.is_zero(f.add(t13, f.mul(f.from_int(27), t03)));
}

/// The group origin o = (1 : -1 : 0), a base point lying on every member.
template <class F>
CurvePoint<F> origin(const HesseCurve<F>& c) {
    const F& f = c.field;
    return CurvePoint<F>(c, {f.one(), f.neg(f.one()), f.zero()});
}

/// The nine base points (0:1:-e), (1:0:-e), (1:-e:0) for e ranging over the
/// cube roots of unity, in that family-major order. Requires a field
/// containing a primitive cube root of unity.
template <class F>
std::vector<std::array<typename F::Elt, 3>> base_points(const F& f) {
    if (!f.has_omega())
        throw InvalidInputError("base points require a primitive cube root of unity in the field");
    typename F::Elt w = f.omega();
    std::array<typename F::Elt, 3> etas{f.one(), w, f.mul(w, w)};
    std::vector<std::array<typename F::Elt, 3>> out;
    for (const auto& e : etas) {
        typename F::Elt ne = f.neg(e);
        out.push_back(canonical_proj<F>(f, {f.zero(), f.one(), ne}));
        out.push_back(canonical_proj<F>(f, {f.one(), f.zero(), ne}));
        out.push_back(canonical_proj<F>(f, {f.one(), ne, f.zero()}));
    }
    return out;
}

/// Negation swaps the first two coordinates. Defined only on smooth members,
/// where it agrees with the chord through the origin.
template <class F>
CurvePoint<F> neg(const CurvePoint<F>& p) {
    HesseCurve<F> c(p.field, p.t0, p.t1);
    if (!is_smooth_member(c))
        throw InvalidInputError("group operations require a smooth member");
    return CurvePoint<F>(c, {p.x[1], p.x[0], p.x[2]});
}

namespace detail {

/// Gradient of the pencil cubic at a coordinate triple.
template <class F>
std::array<typename F::Elt, 3> pencil_gradient(const HesseCurve<F>& c,
                                               const std::array<typename F::Elt, 3>& p) {
    const F& f = c.field;
    typename F::Elt three_t0 = f.mul(f.from_int(3), c.t0);
    auto partial = [&](int i, int j, int k) {
        return f.add(f.mul(three_t0, f.mul(p[i], p[i])), f.mul(c.t1, f.mul(p[j], p[k])));
    };
    return {partial(0, 1, 2), partial(1, 0, 2), partial(2, 0, 1)};
}

template <class F>
typename F::Elt dot3(const F& f, const std::array<typename F::Elt, 3>& a,
                     const std::array<typename F::Elt, 3>& b) {
    typename F::Elt s = f.zero();
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

template <class F>
std::array<typename F::Elt, 3> combine(const F& f, const typename F::Elt& s,
                                       const std::array<typename F::Elt, 3>& a,
                                       const typename F::Elt& t,
                                       const std::array<typename F::Elt, 3>& b) {
    std::array<typename F::Elt, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = f.add(f.mul(s, a[i]), f.mul(t, b[i]));
    return out;
}

/// Restriction of the cubic to the line {s A + t B}: the binary cubic
/// c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3 with polarization coefficients
/// c0 = F(A), c1 = grad F(A).B, c2 = grad F(B).A, c3 = F(B). These identities
/// hold over any coefficient field (no division by 2 or 3 involved).
template <class F>
std::array<typename F::Elt, 4> line_restriction(const HesseCurve<F>& c,
                                                const std::array<typename F::Elt, 3>& a,
                                                const std::array<typename F::Elt, 3>& b) {
    const F& f = c.field;
    return {c.value_at(a), dot3(f, pencil_gradient(c, a), b),
            dot3(f, pencil_gradient(c, b), a), c.value_at(b)};
}

/// A direction spanning the tangent line at p together with p itself: the
/// canonical kernel basis of the 1x3 gradient matrix contains p (Euler
/// relation); the first basis row independent of p is the direction.
template <class F>
std::array<typename F::Elt, 3> tangent_direction(const HesseCurve<F>& c,
                                                 const CurvePoint<F>& p) {
    const F& f = c.field;
    auto g = pencil_gradient(c, p.x);
    Matrix<F> m(f, 1, 3);
    for (int i = 0; i < 3; ++i) m.at(0, i) = g[i];
    Subspace<F> ker = kernel(m);
    if (ker.dim() != 2)
        throw InternalInconsistencyError("tangent space at a smooth point must be a plane");
    for (int r = 0; r < 2; ++r) {
        std::array<typename F::Elt, 3> d{ker.basis.at(r, 0), ker.basis.at(r, 1),
                                         ker.basis.at(r, 2)};
        Matrix<F> pair(f, 2, 3);
        for (int i = 0; i < 3; ++i) {
            pair.at(0, i) = p.x[i];
            pair.at(1, i) = d[i];
        }
        if (rank_of(pair) == 2) return d;
    }
    throw InternalInconsistencyError("kernel plane collapsed onto the point");
}

}  // namespace detail

/// Third intersection of the line through p and q with the member (the
/// tangent line when p = q). The two known roots are deflated exactly: with
/// both points on the curve the restricted binary cubic is s t (c1 s + c2 t),
/// so the third root is (-c2 : c1); the tangent case has a double root at
/// the point and third root (-c3 : c2) along (point, direction).
template <class F>
CurvePoint<F> third_intersection(const CurvePoint<F>& p, const CurvePoint<F>& q) {
    if (!p.on_same_curve(q)) throw InvalidInputError("points lie on different members");
    const F& f = p.field;
    HesseCurve<F> c(f, p.t0, p.t1);
    if (p == q) {
        auto d = detail::tangent_direction(c, p);
        auto cf = detail::line_restriction(c, p.x, d);
        if (!f.is_zero(cf[0]) || !f.is_zero(cf[1]))
            throw InternalInconsistencyError("tangent line restriction must have a double root");
        if (f.is_zero(cf[2]) && f.is_zero(cf[3]))
            throw InvalidInputError("degenerate chord: line contained in the curve");
        return CurvePoint<F>(c, detail::combine(f, f.neg(cf[3]), p.x, cf[2], d));
    }
    auto cf = detail::line_restriction(c, p.x, q.x);
    if (!f.is_zero(cf[0]) || !f.is_zero(cf[3]))
        throw InternalInconsistencyError("chord endpoints must lie on the curve");
    if (f.is_zero(cf[1]) && f.is_zero(cf[2]))
        throw InvalidInputError("degenerate chord: line contained in the curve");
    return CurvePoint<F>(c, detail::combine(f, f.neg(cf[2]), p.x, cf[1], q.x));
}

/// Chord-and-tangent addition with origin (1:-1:0):
/// p + q = third(o, third(p, q)). Requires a smooth member.
template <class F>
CurvePoint<F> add(const CurvePoint<F>& p, const CurvePoint<F>& q) {
    if (!p.on_same_curve(q)) throw InvalidInputError("points lie on different members");
    HesseCurve<F> c(p.field, p.t0, p.t1);
    if (!is_smooth_member(c))
        throw InvalidInputError("group operations require a smooth member");
    return third_intersection(origin(c), third_intersection(p, q));
}

/// Translation of p by the point t, i.e. the group sum.
template <class F>
CurvePoint<F> translate(const CurvePoint<F>& p, const CurvePoint<F>& t) {
    return add(p, t);
}

/// Smallest n >= 1 with n.p = o, searched up to the cap; empty when the
/// order exceeds the cap (e.g. non-torsion points over Q).
template <class F>
std::optional<long> torsion_order(const CurvePoint<F>& p, long cap = 200) {
    HesseCurve<F> c(p.field, p.t0, p.t1);
    CurvePoint<F> o = origin(c);
    CurvePoint<F> acc = p;
    for (long n = 1; n <= cap; ++n) {
        if (acc == o) return n;
        acc = add(acc, p);
    }
    return std::nullopt;
}

/// The three bidegree-(1,1) graph forms of the translation attached to the
/// parameter (a:b:c), in the six variables (x0,y0,z0,x1,y1,z1):
///   f1 = a y0 z1 + b z0 y1 + c x0 x1
///   f2 = a z0 x1 + b x0 z1 + c y0 y1
///   f3 = a x0 y1 + b y0 x1 + c z0 z1
template <class F>
std::array<Poly<F>, 3> graph_forms(const HParamPoint<F>& p) {
    const F& f = p.field;
    const auto& abc = p.x;
    auto mono = [&](int i0, int i1) {
        std::vector<int> e(6, 0);
        e[i0] += 1;
        e[3 + i1] += 1;
        return e;
    };
    Poly<F> f1(f, 6), f2(f, 6), f3(f, 6);
    f1.add_term(mono(1, 2), abc[0]);
    f1.add_term(mono(2, 1), abc[1]);
    f1.add_term(mono(0, 0), abc[2]);
    f2.add_term(mono(2, 0), abc[0]);
    f2.add_term(mono(0, 2), abc[1]);
    f2.add_term(mono(1, 1), abc[2]);
    f3.add_term(mono(0, 1), abc[0]);
    f3.add_term(mono(1, 0), abc[1]);
    f3.add_term(mono(2, 2), abc[2]);
    return {f1, f2, f3};
}

/// The 3x3 coefficient matrix of the graph system in the second point: row i
/// holds the coefficients of (x1, y1, z1) in the i-th graph form after
/// substituting q for (x0, y0, z0).
template <class F>
Matrix<F> graph_matrix(const HParamPoint<F>& p, const std::array<typename F::Elt, 3>& q) {
    const F& f = p.field;
    auto forms = graph_forms(p);
    Matrix<F> m(f, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (const auto& [e, cv] : forms[i].terms) {
            typename F::Elt coef = cv;
            int col = -1;
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < e[j]; ++k) coef = f.mul(coef, q[j]);
                if (e[3 + j] == 1) col = j;
            }
            m.at(i, col) = f.add(m.at(i, col), coef);
        }
    return m;
}

/// Solves the graph system at q: the unique projective point annihilating
/// all three forms together with q. The system must have rank exactly 2.
template <class F>
std::array<typename F::Elt, 3> graph_solve(const HParamPoint<F>& p,
                                           const std::array<typename F::Elt, 3>& q) {
    const F& f = p.field;
    Subspace<F> ker = kernel(graph_matrix(p, q));
    if (ker.dim() != 1)
        throw InternalInconsistencyError("graph system does not have a unique solution point");
    return canonical_proj<F>(f, {ker.basis.at(0, 0), ker.basis.at(0, 1), ker.basis.at(0, 2)});
}

/// All points of a member over a finite prime field, in a fixed scan order.
inline std::vector<std::array<std::uint64_t, 3>> enumerate_points(
    const HesseCurve<PrimeField>& c) {
    const PrimeField& f = c.field;
    std::vector<std::array<std::uint64_t, 3>> pts;
    auto consider = [&](std::array<std::uint64_t, 3> p) {
        if (c.contains(p)) pts.push_back(p);
    };
    for (std::uint64_t y = 0; y < f.p; ++y)
        for (std::uint64_t z = 0; z < f.p; ++z) consider({1, y, z});
    for (std::uint64_t z = 0; z < f.p; ++z) consider({0, 1, z});
    consider({0, 0, 1});
    return pts;
}

}  // namespace ncp2
