#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ncp2/poly.hpp"

namespace ncp2 {

/// The 10 degree-3 monomials in (x, y, z), lexicographically descending.
/// Ternary cubics are identified with coefficient vectors over this basis.
inline constexpr std::array<std::array<int, 3>, 10> CUBIC_MONS = {{{3, 0, 0},
                                                                   {2, 1, 0},
                                                                   {2, 0, 1},
                                                                   {1, 2, 0},
                                                                   {1, 1, 1},
                                                                   {1, 0, 2},
                                                                   {0, 3, 0},
                                                                   {0, 2, 1},
                                                                   {0, 1, 2},
                                                                   {0, 0, 3}}};

/// The two fundamental invariants of ternary cubics, of degrees 4 and 6 in
/// the 10 coefficients, realized as integer polynomials. Derived at first
/// use: candidates are the isobaric coefficient monomials (weight (D,D,D)),
/// and the invariants span the common kernel of the six elementary sl_3
/// derivations. The integer normalization clears denominators, divides by
/// the content, and makes the coefficient of the first candidate monomial
/// (descending lexicographic order) positive.
///
/// The discriminant scaling is not taken from any textbook convention; it is
/// calibrated once against the family y^2 z - x^3 - a x z^2 - b z^3, on
/// which lambda S^3 + mu T^2 must equal 4a^3 + 27b^2 identically.
struct AronholdData {
    std::vector<std::array<int, 10>> cand4;  ///< degree-4 candidate exponents
    std::vector<std::array<int, 10>> cand6;  ///< degree-6 candidate exponents
    std::vector<Int> s_coeffs;               ///< integer coefficients of S over cand4
    std::vector<Int> t_coeffs;               ///< integer coefficients of T over cand6
    Rat lambda;                              ///< disc = lambda S^3 + mu T^2
    Rat mu;
};

/// Builds (once, then caches) the invariant data over Q.
const AronholdData& aronhold();

/// Extracts the 10 coefficients of a ternary cubic, validating arity and
/// homogeneous degree 3.
template <class F>
std::array<typename F::Elt, 10> cubic_coefficients(const Poly<F>& f) {
    if (f.nvars != 3) throw InvalidInputError("ternary cubic must have 3 variables");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
        throw InvalidInputError("polynomial is not a nonzero homogeneous cubic");
    std::array<typename F::Elt, 10> c;
    for (int i = 0; i < 10; ++i)
        c[i] = f.coeff({CUBIC_MONS[i][0], CUBIC_MONS[i][1], CUBIC_MONS[i][2]});
    return c;
}

/// Evaluates an integer-coefficient invariant on a cubic's coefficient
/// vector inside an arbitrary field.
template <class F>
typename F::Elt eval_integer_invariant(const F& f,
                                       const std::vector<std::array<int, 10>>& cand,
                                       const std::vector<Int>& coef,
                                       const std::array<typename F::Elt, 10>& c) {
    typename F::Elt total = f.zero();
    for (size_t t = 0; t < cand.size(); ++t) {
        if (coef[t] == 0) continue;
        typename F::Elt term = f.from_rat(Rat(coef[t]));
        for (int i = 0; i < 10; ++i)
            for (int k = 0; k < cand[t][i]; ++k) term = f.mul(term, c[i]);
        total = f.add(total, term);
    }
    return total;
}

/// Aronhold invariants (S, T) of a ternary cubic, in the normalization
/// described on AronholdData. Covariance: S(g.F) = det(g)^4 S(F) and
/// T(g.F) = det(g)^6 T(F) for linear substitutions g.
template <class F>
std::pair<typename F::Elt, typename F::Elt> cubic_invariants_ST(const Poly<F>& f) {
    const AronholdData& d = aronhold();
    auto c = cubic_coefficients(f);
    return {eval_integer_invariant(f.field, d.cand4, d.s_coeffs, c),
            eval_integer_invariant(f.field, d.cand6, d.t_coeffs, c)};
}

/// Calibrated discriminant lambda S^3 + mu T^2; zero exactly on singular
/// cubics in characteristic 0 or p >= 5.
template <class F>
typename F::Elt cubic_discriminant(const Poly<F>& f) {
    const AronholdData& d = aronhold();
    const F& k = f.field;
    auto [s, t] = cubic_invariants_ST(f);
    typename F::Elt s3 = k.mul(k.mul(s, s), s);
    typename F::Elt t2 = k.mul(t, t);
    return k.add(k.mul(k.from_rat(d.lambda), s3), k.mul(k.from_rat(d.mu), t2));
}

/// True iff the projective plane curve F = 0 is non-singular. Decided by the
/// calibrated discriminant, which characterizes smoothness only away from
/// characteristics 2 and 3; those fields are rejected.
template <class F>
bool cubic_is_smooth(const Poly<F>& f) {
    unsigned long p = f.field.characteristic();
    if (p != 0 && p < 5)
        throw InvalidInputError("smoothness test requires characteristic 0 or >= 5");
    if (f.is_zero()) throw InvalidInputError("smoothness of the zero polynomial is undefined");
    return !f.field.is_zero(cubic_discriminant(f));
}

}  // namespace ncp2
