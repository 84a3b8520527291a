#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>

#include "ncp2/cubic_invariants.hpp"
#include "ncp2/fields.hpp"
#include "ncp2/hesse.hpp"

using namespace ncp2;

namespace {

using QPoly = Poly<RationalField>;

struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed * 2654435761u + 1) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

using QP = HParamPoint<RationalField>;
using FP = HParamPoint<PrimeField>;

std::array<Rat, 3> rat3(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

}  // namespace

// ======== M5: parameter points and pencil members ========

TEST_CASE("projective canonicalization scales the first nonzero coordinate to one") {
    RationalField Q;
    QP p(Q, rat3(2, 4, 6));
    CHECK(p.x == rat3(1, 2, 3));
    QP q(Q, rat3(0, 0, 5));
    CHECK(q.x == rat3(0, 0, 1));
    QP r(Q, {Rat(0), Rat(-3), Rat(7)});
    CHECK(r.x == std::array<Rat, 3>{Rat(0), Rat(1), Rat(-7) / 3});
    CHECK_THROWS_AS(QP(Q, rat3(0, 0, 0)), InvalidInputError);
    CHECK(QP(Q, rat3(3, 6, 9)) == p);
}

TEST_CASE("member through a parameter point matches the hand-expanded pencil cubic") {
    RationalField Q;

    // (1,2,3): t0 = 6, t1 = -36, canonically (1 : -6). Scaling by 6 recovers
    // the raw form 6(x^3+y^3+z^3) - 36xyz.
    HesseCurve<RationalField> c = member_through(QP(Q, rat3(1, 2, 3)));
    CHECK(c.t0 == Rat(1));
    CHECK(c.t1 == Rat(-6));
    QPoly expect(Q, 3);
    expect.add_term({3, 0, 0}, Rat(1));
    expect.add_term({0, 3, 0}, Rat(1));
    expect.add_term({0, 0, 3}, Rat(1));
    expect.add_term({1, 1, 1}, Rat(-6));
    CHECK(c.cubic == expect);
    CHECK(c.contains(rat3(1, 2, 3)));

    // (0,0,1): t0 = 0, t1 = -1, canonically (0 : 1), the triangle xyz = 0.
    HesseCurve<RationalField> tri = member_through(QP(Q, rat3(0, 0, 1)));
    CHECK(tri.t0 == Rat(0));
    CHECK(tri.t1 == Rat(1));
    QPoly xyz(Q, 3);
    xyz.add_term({1, 1, 1}, Rat(1));
    CHECK(tri.cubic == xyz);

    // (1,-1,0) is a base point: it lies on every member and determines none.
    CHECK_THROWS_AS(member_through(QP(Q, rat3(1, -1, 0))), InvalidInputError);

    CHECK_THROWS_AS(HesseCurve<RationalField>(Q, Rat(0), Rat(0)), InvalidInputError);
}

TEST_CASE("smoothness of members is decided by t0 != 0 and t1^3 != -27 t0^3") {
    RationalField Q;
    CHECK_FALSE(is_smooth_member(HesseCurve<RationalField>(Q, Rat(0), Rat(1))));
    CHECK_FALSE(is_smooth_member(HesseCurve<RationalField>(Q, Rat(1), Rat(-3))));
    CHECK(is_smooth_member(HesseCurve<RationalField>(Q, Rat(1), Rat(1))));
    CHECK(is_smooth_member(member_through(QP(Q, rat3(1, 2, 3)))));

    // Over Q(w) the two conjugate singular fibers (1 : -3w), (1 : -3w^2)
    // become visible.
    CyclotomicField Qw;
    auto w = Qw.omega();
    auto m3w = Qw.mul(Qw.from_int(-3), w);
    auto m3w2 = Qw.mul(m3w, w);
    CHECK_FALSE(is_smooth_member(HesseCurve<CyclotomicField>(Qw, Qw.one(), m3w)));
    CHECK_FALSE(is_smooth_member(HesseCurve<CyclotomicField>(Qw, Qw.one(), m3w2)));
    CHECK(is_smooth_member(HesseCurve<CyclotomicField>(Qw, Qw.one(), w)));

    // The member through (1,2,3) is smooth over Q and over F_13 but
    // degenerates over F_7 (there t1^3 = -27 t0^3).
    PrimeField F13(13), F7(7);
    CHECK(is_smooth_member(member_through(FP(F13, {1, 2, 3}))));
    CHECK_FALSE(is_smooth_member(member_through(FP(F7, {1, 2, 3}))));

    // Cross-check against the discriminant-based smoothness test on the
    // underlying ternary cubic.
    for (long t1 = -8; t1 <= 8; ++t1) {
        HesseCurve<RationalField> m(Q, Rat(1), Rat(t1));
        CHECK(is_smooth_member(m) == cubic_is_smooth(m.cubic));
    }
    for (std::uint64_t t1 = 0; t1 < 13; ++t1) {
        HesseCurve<PrimeField> m(F13, 1, t1);
        CHECK(is_smooth_member(m) == cubic_is_smooth(m.cubic));
    }
}

// ======== M5: base points ========

TEST_CASE("base points require a cube root of unity and lie on every member") {
    RationalField Q;
    CHECK_THROWS_AS(base_points(Q), InvalidInputError);

    CyclotomicField Qw;
    auto pts = base_points(Qw);
    REQUIRE(pts.size() == 9);

    // All distinct, and the group origin (1 : -1 : 0) is among them.
    std::set<std::string> seen;
    for (const auto& p : pts)
        seen.insert(Qw.to_string(p[0]) + "|" + Qw.to_string(p[1]) + "|" + Qw.to_string(p[2]));
    CHECK(seen.size() == 9);
    std::array<CyclotomicField::Elt, 3> o{Qw.one(), Qw.neg(Qw.one()), Qw.zero()};
    CHECK(std::count(pts.begin(), pts.end(), o) == 1);

    // Every base point lies on the member through (1,2,3) and on the
    // triangle member, hence on the whole pencil.
    HesseCurve<CyclotomicField> m = member_through(HParamPoint<CyclotomicField>(
        Qw, {Qw.from_int(1), Qw.from_int(2), Qw.from_int(3)}));
    HesseCurve<CyclotomicField> tri(Qw, Qw.zero(), Qw.one());
    for (const auto& p : pts) {
        CHECK(m.contains(p));
        CHECK(tri.contains(p));
    }
}

TEST_CASE("base points over F_13 use the cube roots of unity 1, 3, 9") {
    PrimeField F(13);
    auto pts = base_points(F);
    REQUIRE(pts.size() == 9);
    // eta in {1, 3, 9} gives -eta in {12, 10, 4}.
    using A = std::array<std::uint64_t, 3>;
    std::set<A> expect{{0, 1, 12}, {1, 0, 12}, {1, 12, 0}, {0, 1, 10}, {1, 0, 10},
                       {1, 10, 0}, {0, 1, 4},  {1, 0, 4},  {1, 4, 0}};
    std::set<A> got(pts.begin(), pts.end());
    CHECK(got == expect);

    HesseCurve<PrimeField> m = member_through(FP(F, {1, 2, 3}));
    for (const auto& p : pts) CHECK(m.contains(p));
}

// ======== M5: group law on a smooth member ========

TEST_CASE("curve points are validated and negation swaps the first two coordinates") {
    RationalField Q;
    HesseCurve<RationalField> m = member_through(QP(Q, rat3(1, 2, 3)));
    CHECK_THROWS_AS(CurvePoint<RationalField>(m, rat3(1, 1, 1)), InvalidInputError);

    CurvePoint<RationalField> o = origin(m);
    CHECK(neg(o) == o);
    CurvePoint<RationalField> p(m, rat3(0, 1, -1));
    CHECK(neg(p) == CurvePoint<RationalField>(m, rat3(1, 0, -1)));

    // Negation is undefined on singular members.
    HesseCurve<RationalField> tri(Q, Rat(0), Rat(1));
    CurvePoint<RationalField> corner(tri, rat3(1, 0, 0));
    CHECK_THROWS_AS(neg(corner), InvalidInputError);
}

TEST_CASE("rational chord arithmetic on the member through (1,2,3)") {
    RationalField Q;
    HesseCurve<RationalField> m = member_through(QP(Q, rat3(1, 2, 3)));
    CurvePoint<RationalField> o = origin(m);
    CurvePoint<RationalField> p(m, rat3(0, 1, -1));
    CurvePoint<RationalField> q(m, rat3(1, 0, -1));

    // The three rational base points are collinear (det of their coordinate
    // matrix vanishes), so p + q = o; consistently q = -p.
    CHECK(third_intersection(p, q) == o);
    CHECK(add(p, q) == o);
    CHECK(q == neg(p));

    // p is an inflection: the tangent at p meets the curve triply, so the
    // tangent third intersection is p itself and 2p = -p.
    CHECK(third_intersection(p, p) == p);
    CHECK(add(p, p) == neg(p));
    CHECK(torsion_order(p).value() == 3);
    CHECK(torsion_order(o).value() == 1);

    // (1:2:3) lies on the member; the order cap is respected when no
    // multiple reaches the origin within it.
    CurvePoint<RationalField> g(m, rat3(1, 2, 3));
    CurvePoint<RationalField> acc = g;
    bool hit = false;
    for (int n = 2; n <= 10; ++n) {
        acc = add(acc, g);
        if (acc == o) hit = true;
    }
    CHECK_FALSE(hit);
    CHECK_FALSE(torsion_order(g, 10).has_value());

    // Addition demands one member for both operands, and a smooth one.
    HesseCurve<RationalField> other(Q, Rat(1), Rat(1));
    CurvePoint<RationalField> po(other, rat3(1, -1, 0));
    CHECK_THROWS_AS(add(p, po), InvalidInputError);
    HesseCurve<RationalField> tri(Q, Rat(0), Rat(1));
    CurvePoint<RationalField> c1(tri, rat3(1, -1, 0));
    CurvePoint<RationalField> c2(tri, rat3(0, 1, -1));
    CHECK_THROWS_AS(add(c1, c2), InvalidInputError);

    // A line inside a singular member has no third intersection: the chord
    // through two corners of the triangle lies in the triangle.
    CurvePoint<RationalField> e1(tri, rat3(1, 0, 0));
    CurvePoint<RationalField> e2(tri, rat3(0, 1, 0));
    CHECK_THROWS_AS(third_intersection(e1, e2), InvalidInputError);
}

TEST_CASE("the member through (1,2,3) over F_13 has 18 points forming a group") {
    PrimeField F(13);
    HesseCurve<PrimeField> m = member_through(FP(F, {1, 2, 3}));
    // Raw parameters (6 : 3) normalize to (1 : 7).
    CHECK(m.t0 == 1);
    CHECK(m.t1 == 7);

    auto pts = enumerate_points(m);
    REQUIRE(pts.size() == 18);
    using CP = CurvePoint<PrimeField>;
    std::vector<CP> e;
    for (const auto& p : pts) e.emplace_back(m, p);
    CP o = origin(m);

    auto find = [&](const CP& p) {
        return std::count(e.begin(), e.end(), p) == 1;
    };

    for (const auto& p : e) {
        CHECK(add(p, o) == p);       // identity
        CHECK(add(p, neg(p)) == o);  // inverses
        CHECK(find(add(p, p)));      // closure (doubling)
    }
    for (const auto& p : e)
        for (const auto& q : e) CHECK(add(p, q) == add(q, p));  // commutativity

    // All nine base points lie on this member with order dividing 3, and at
    // least one has order exactly 3.
    int order3 = 0;
    for (const auto& b : base_points(F)) {
        CP bp(m, b);
        long n = torsion_order(bp).value();
        CHECK(3 % n == 0);
        if (n == 3) ++order3;
    }
    CHECK(order3 == 8);  // all but the origin
}

TEST_CASE("associativity holds on 100 seeded triples over F_13 and F_19") {
    for (std::uint64_t prime : {13ull, 19ull}) {
        PrimeField F(prime);
        HesseCurve<PrimeField> m = member_through(FP(F, {1, 2, 3}));
        REQUIRE(is_smooth_member(m));
        auto pts = enumerate_points(m);
        std::vector<CurvePoint<PrimeField>> e;
        for (const auto& p : pts) e.emplace_back(m, p);

        Lcg rng(40 + prime);
        for (int trial = 0; trial < 100; ++trial) {
            const auto& a = e[rng.range(0, static_cast<long>(e.size()) - 1)];
            const auto& b = e[rng.range(0, static_cast<long>(e.size()) - 1)];
            const auto& c = e[rng.range(0, static_cast<long>(e.size()) - 1)];
            CHECK(add(add(a, b), c) == add(a, add(b, c)));
        }
    }
}

TEST_CASE("group axioms hold exhaustively on a smooth member over F_7") {
    PrimeField F(7);
    HesseCurve<PrimeField> m(F, 1, 3);
    REQUIRE(is_smooth_member(m));
    auto pts = enumerate_points(m);
    std::vector<CurvePoint<PrimeField>> e;
    for (const auto& p : pts) e.emplace_back(m, p);
    CurvePoint<PrimeField> o = origin(m);

    for (const auto& p : e) {
        CHECK(add(p, o) == p);
        CHECK(add(p, neg(p)) == o);
    }
    for (const auto& a : e)
        for (const auto& b : e)
            for (const auto& c : e) CHECK(add(add(a, b), c) == add(a, add(b, c)));
}

TEST_CASE("negation via coordinate swap equals negation via the chord through the origin") {
    PrimeField F(13);
    HesseCurve<PrimeField> m = member_through(FP(F, {1, 2, 3}));
    auto pts = enumerate_points(m);
    std::vector<CurvePoint<PrimeField>> e;
    for (const auto& p : pts) e.emplace_back(m, p);
    CurvePoint<PrimeField> o = origin(m);

    Lcg rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& p = e[rng.range(0, static_cast<long>(e.size()) - 1)];
        CHECK(neg(p) == third_intersection(p, o));
    }
}

// ======== M5: translation graphs ========

TEST_CASE("graph forms have the frozen bidegree-(1,1) shape and coefficient matrix") {
    RationalField Q;
    QP p(Q, rat3(1, 2, 3));
    auto forms = graph_forms(p);

    // f1 = a y0 z1 + b z0 y1 + c x0 x1 with (a,b,c) = (1,2,3); variables are
    // ordered (x0,y0,z0,x1,y1,z1).
    QPoly f1(Q, 6);
    f1.add_term({0, 1, 0, 0, 0, 1}, Rat(1));
    f1.add_term({0, 0, 1, 0, 1, 0}, Rat(2));
    f1.add_term({1, 0, 0, 1, 0, 0}, Rat(3));
    CHECK(forms[0] == f1);
    for (const auto& f : forms) {
        CHECK(f.is_homogeneous());
        CHECK(f.total_degree() == 2);
        for (const auto& [e, cv] : f.terms) {
            CHECK(e[0] + e[1] + e[2] == 1);
            CHECK(e[3] + e[4] + e[5] == 1);
        }
    }

    // Coefficient matrix at q = (2, 5, 11): rows are the (x1,y1,z1)
    // coefficients [c q0, b q2, a q1], [a q2, c q1, b q0], [b q1, a q0, c q2].
    Matrix<RationalField> g = graph_matrix(p, rat3(2, 5, 11));
    Matrix<RationalField> expect = Matrix<RationalField>::from_rows(
        Q, {{Rat(6), Rat(22), Rat(5)}, {Rat(11), Rat(15), Rat(4)}, {Rat(10), Rat(2), Rat(33)}});
    CHECK(g == expect);
}

TEST_CASE("the graph of the forms at p is translation by p on the member through p") {
    PrimeField F(13);
    FP p(F, {1, 2, 3});
    HesseCurve<PrimeField> m = member_through(p);
    CurvePoint<PrimeField> t(m, {1, 2, 3});
    auto forms = graph_forms(p);
    auto pts = enumerate_points(m);
    REQUIRE(pts.size() == 18);

    for (const auto& qx : pts) {
        CurvePoint<PrimeField> q(m, qx);
        // The graph system at q has rank exactly 2 and its solution is the
        // group translate q + (1:2:3).
        CHECK(rank_of(graph_matrix(p, qx)) == 2);
        auto img = graph_solve(p, qx);
        CHECK(img == translate(q, t).x);

        // The pair (q, image) annihilates all three forms.
        for (const auto& f : forms) {
            auto v = f.eval({qx[0], qx[1], qx[2], img[0], img[1], img[2]});
            CHECK(F.is_zero(v));
        }
    }
}

TEST_CASE("translation graphs act consistently for a second parameter point over F_13") {
    PrimeField F(13);
    FP p(F, {2, 5, 7});
    HesseCurve<PrimeField> m = member_through(p);
    REQUIRE(is_smooth_member(m));
    CurvePoint<PrimeField> t(m, {2, 5, 7});
    auto pts = enumerate_points(m);

    Lcg rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& qx = pts[rng.range(0, static_cast<long>(pts.size()) - 1)];
        CurvePoint<PrimeField> q(m, qx);
        CHECK(graph_solve(p, qx) == add(q, t).x);
    }
}

TEST_CASE("the graph solution at the origin recovers the parameter point over Q") {
    RationalField Q;
    QP p(Q, rat3(1, 2, 3));
    HesseCurve<RationalField> m = member_through(p);
    CurvePoint<RationalField> o = origin(m);
    CHECK(graph_solve(p, o.x) == rat3(1, 2, 3));
}

TEST_CASE("the forms at the origin parameter define the diagonal") {
    RationalField Q;
    QP o(Q, rat3(1, -1, 0));
    // f1 = y0 z1 - z0 y1, f2 = z0 x1 - x0 z1, f3 = x0 y1 - y0 x1: the 2x2
    // minors forcing (x1:y1:z1) = (x0:y0:z0).
    for (const auto& q : {rat3(1, 2, 3), rat3(0, 1, -1), rat3(5, -7, 2), rat3(0, 0, 1)}) {
        auto img = graph_solve(o, q);
        CHECK(img == canonical_proj(Q, q));
    }
}
