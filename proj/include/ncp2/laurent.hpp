#pragma once

#include <map>

#include "ncp2/rational.hpp"

namespace ncp2 {

/// Integer-coefficient Laurent polynomial q(t) with finite support, stored
/// as a sparse exponent -> coefficient map without zero entries.
struct LaurentData {
    std::map<int, Int> c;

    static LaurentData zero() { return {}; }

    static LaurentData from_terms(const std::map<int, Int>& terms) {
        LaurentData q;
        for (const auto& [e, v] : terms)
            if (v != 0) q.c.emplace(e, v);
        return q;
    }

    bool operator==(const LaurentData& o) const { return c == o.c; }

    Int coeff(int e) const {
        auto it = c.find(e);
        return it == c.end() ? Int(0) : it->second;
    }

    void add_term(int e, const Int& v) {
        auto it = c.find(e);
        if (it == c.end()) {
            if (v != 0) c.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }

    /// q(1) = sum of all coefficients.
    Int at_one() const {
        Int s = 0;
        for (const auto& [e, v] : c) s += v;
        return s;
    }
};

inline LaurentData operator+(const LaurentData& x, const LaurentData& y) {
    LaurentData out = x;
    for (const auto& [e, v] : y.c) out.add_term(e, v);
    return out;
}

inline LaurentData operator-(const LaurentData& x, const LaurentData& y) {
    LaurentData out = x;
    for (const auto& [e, v] : y.c) out.add_term(e, -v);
    return out;
}

inline LaurentData operator*(const LaurentData& x, const LaurentData& y) {
    LaurentData out;
    for (const auto& [ex, vx] : x.c)
        for (const auto& [ey, vy] : y.c) out.add_term(ex + ey, vx * vy);
    return out;
}

inline LaurentData laurent_const(const Int& v) {
    LaurentData q;
    q.add_term(0, v);
    return q;
}

/// 1 - t, the quantity repeatedly divided out when expanding around t = 1.
inline LaurentData one_minus_t() {
    LaurentData q;
    q.add_term(0, 1);
    q.add_term(1, -1);
    return q;
}

/// Exact division by (1 - t). Requires q(1) = 0; with q = t^m p(t) the
/// quotient coefficients are the partial sums of p from the bottom up:
/// (1-t) sum_j c_j t^j has coefficient c_j - c_{j-1} at t^j, so c_j must be
/// the running sum of the dividend's coefficients.
inline LaurentData divide_by_one_minus_t(const LaurentData& q) {
    if (q.c.empty()) return LaurentData::zero();
    if (q.at_one() != 0)
        throw InvalidInputError("division by (1-t) of a polynomial not vanishing at t=1");
    int lo = q.c.begin()->first;
    int hi = q.c.rbegin()->first;
    LaurentData out;
    Int run = 0;
    for (int e = lo; e < hi; ++e) {
        run += q.coeff(e);
        out.add_term(e, run);
    }
    return out;
}

/// The exact expansion data of q(t) around t = 1:
/// q = r + a(1-t) + b(1-t)^2 + f(t)(1-t)^3 with r, a, b integers and f a
/// Laurent polynomial, all uniquely determined.
struct GKProfile {
    Int r;
    Int a;
    Int b;
    LaurentData f;
    Int f_at_1;
    int gkdim = 0;
};

/// Computes the expansion by repeated synthetic division by (1-t) and assigns
/// the GK dimension from the leading sign pattern: growth is cubic while the
/// rank r is positive, then drops one dimension as each leading coefficient
/// vanishes.
inline GKProfile gk_profile(const LaurentData& q) {
    GKProfile g;
    g.r = q.at_one();
    LaurentData q1 = divide_by_one_minus_t(q - laurent_const(g.r));
    g.a = q1.at_one();
    LaurentData q2 = divide_by_one_minus_t(q1 - laurent_const(g.a));
    g.b = q2.at_one();
    g.f = divide_by_one_minus_t(q2 - laurent_const(g.b));
    g.f_at_1 = g.f.at_one();
    if (g.r > 0)
        g.gkdim = 3;
    else if (g.r == 0 && g.a > 0)
        g.gkdim = 2;
    else if (g.r == 0 && g.a == 0 && g.b > 0)
        g.gkdim = 1;
    else
        g.gkdim = 0;
    return g;
}

}  // namespace ncp2
