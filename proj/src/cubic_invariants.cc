#include "ncp2/cubic_invariants.hpp"

#include <algorithm>
#include <map>

#include "ncp2/matrix.hpp"
#include "ncp2/subspace.hpp"

namespace ncp2 {

namespace {

using QPoly = Poly<RationalField>;

/// Isobaric candidate monomials: exponent vectors e over the 10 cubic
/// coefficients with sum(e) = D and weight sum(e_i * CUBIC_MONS[i]) equal to
/// (D, D, D). Returned in descending lexicographic order, which fixes the
/// normalization of the derived invariants.
std::vector<std::array<int, 10>> isobaric_candidates(int D) {
    std::vector<std::array<int, 10>> out;
    std::array<int, 10> e{};
    std::array<int, 3> w{};
    // Multisets of D cubic monomials, enumerated with non-decreasing index.
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            if (w[0] == D && w[1] == D && w[2] == D) out.push_back(e);
            return;
        }
        for (int i = start; i < 10; ++i) {
            e[i] += 1;
            for (int k = 0; k < 3; ++k) w[k] += CUBIC_MONS[i][k];
            self(self, i, remaining - 1);
            e[i] -= 1;
            for (int k = 0; k < 3; ++k) w[k] -= CUBIC_MONS[i][k];
        }
    };
    rec(rec, 0, D);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Matrix of the derivation x_l d/dx_k on the coefficient vector of a cubic:
/// column j (monomial m) contributes m_k to the row of m - e_k + e_l.
std::array<std::array<int, 10>, 10> derivation_matrix(int k, int l) {
    std::array<std::array<int, 10>, 10> L{};
    for (int j = 0; j < 10; ++j) {
        const auto& m = CUBIC_MONS[j];
        if (m[k] == 0) continue;
        std::array<int, 3> e = m;
        e[k] -= 1;
        e[l] += 1;
        for (int i = 0; i < 10; ++i)
            if (CUBIC_MONS[i] == e) L[i][j] += m[k];
    }
    return L;
}

/// Applies the induced derivation to one candidate coefficient monomial
/// c^e = prod c_i^{e_i}: D(c^e) = sum_i e_i c^{e - delta_i} (L c)_i. The
/// result is a map from coefficient monomials to integer coefficients.
std::map<std::array<int, 10>, long> apply_derivation(const std::array<std::array<int, 10>, 10>& L,
                                                     const std::array<int, 10>& e) {
    std::map<std::array<int, 10>, long> result;
    for (int i = 0; i < 10; ++i) {
        if (e[i] == 0) continue;
        for (int j = 0; j < 10; ++j) {
            if (L[i][j] == 0) continue;
            std::array<int, 10> ee = e;
            ee[i] -= 1;
            ee[j] += 1;
            result[ee] += static_cast<long>(e[i]) * L[i][j];
        }
    }
    return result;
}

/// The space of degree-D invariants: the common kernel of all six
/// off-diagonal derivations, inside the isobaric candidate span.
std::pair<std::vector<std::array<int, 10>>, Subspace<RationalField>> invariant_space(int D) {
    RationalField Q;
    auto cand = isobaric_candidates(D);
    std::map<std::array<int, 10>, int> cidx;
    for (size_t i = 0; i < cand.size(); ++i) cidx.emplace(cand[i], static_cast<int>(i));

    std::map<std::pair<int, std::array<int, 10>>, std::vector<Rat>> rows;
    int deriv_id = 0;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            if (k == l) continue;
            auto L = derivation_matrix(k, l);
            for (size_t col = 0; col < cand.size(); ++col)
                for (const auto& [target, cf] : apply_derivation(L, cand[col])) {
                    auto& row = rows[{deriv_id, target}];
                    if (row.empty()) row.assign(cand.size(), Rat(0));
                    row[col] += cf;
                }
            ++deriv_id;
        }

    std::vector<std::vector<Rat>> mat;
    mat.reserve(rows.size());
    for (auto& [key, row] : rows) mat.push_back(std::move(row));
    return {cand, kernel(Matrix<RationalField>::from_rows(Q, mat))};
}

/// Scales a rational vector to integers with content 1 and a positive first
/// nonzero entry.
std::vector<Int> to_integer_vector(const std::vector<Rat>& v) {
    Int den = 1;
    for (const auto& c : v) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Int> ints;
    ints.reserve(v.size());
    for (const auto& c : v) {
        Rat scaled = c * Rat(den);
        ints.push_back(scaled.get_num());
    }
    Int g = 0;
    for (const auto& x : ints) {
        Int a = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (g > 1)
        for (auto& x : ints) x /= g;
    for (const auto& x : ints) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : ints) y = -y;
        break;
    }
    return ints;
}

/// Evaluates an integer invariant on a cubic whose coefficients are
/// themselves polynomials (used for the symbolic Weierstrass calibration).
QPoly eval_on_poly_coeffs(const std::vector<std::array<int, 10>>& cand,
                          const std::vector<Int>& coef, const std::array<QPoly, 10>& c) {
    RationalField Q;
    int nv = c[0].nvars;
    QPoly total(Q, nv);
    for (size_t t = 0; t < cand.size(); ++t) {
        if (coef[t] == 0) continue;
        QPoly term = QPoly::constant(Q, nv, Rat(coef[t]));
        for (int i = 0; i < 10; ++i)
            for (int k = 0; k < cand[t][i]; ++k) term = term * c[i];
        total = total + term;
    }
    return total;
}

AronholdData build_aronhold() {
    AronholdData d;
    auto [cand4, ker4] = invariant_space(4);
    auto [cand6, ker6] = invariant_space(6);
    if (ker4.dim() != 1 || ker6.dim() != 1)
        throw InternalInconsistencyError("invariant space of ternary cubics has unexpected dimension");
    d.cand4 = cand4;
    d.cand6 = cand6;
    d.s_coeffs = to_integer_vector(ker4.basis.row(0));
    d.t_coeffs = to_integer_vector(ker6.basis.row(0));

    // Calibration family y^2 z - x^3 - a x z^2 - b z^3 over Q[a, b].
    RationalField Q;
    auto var = [&](int i) { return QPoly::variable(Q, 2, i); };
    auto cst = [&](long n) { return QPoly::constant(Q, 2, Rat(n)); };
    std::array<QPoly, 10> w{cst(-1), cst(0), cst(0), cst(0), cst(0),
                            scale(var(0), Rat(-1)),  // -a at x z^2
                            cst(0), cst(1), cst(0),
                            scale(var(1), Rat(-1))};  // -b at z^3
    QPoly sW = eval_on_poly_coeffs(d.cand4, d.s_coeffs, w);
    QPoly tW = eval_on_poly_coeffs(d.cand6, d.t_coeffs, w);
    QPoly s3 = sW * sW * sW;
    QPoly t2 = tW * tW;
    // Solve lambda s3 + mu t2 = 4 a^3 + 27 b^2 on the (a^3, b^2) coefficients,
    // then verify the full polynomial identity.
    Rat a3S = s3.coeff({3, 0}), b2S = s3.coeff({0, 2});
    Rat a3T = t2.coeff({3, 0}), b2T = t2.coeff({0, 2});
    Rat det = a3S * b2T - a3T * b2S;
    if (det == 0)
        throw InternalInconsistencyError("Weierstrass calibration system is singular");
    d.lambda = (Rat(4) * b2T - Rat(27) * a3T) / det;
    d.mu = (a3S * Rat(27) - b2S * Rat(4)) / det;
    QPoly disc = scale(s3, d.lambda) + scale(t2, d.mu);
    QPoly expected =
        scale(poly_pow(var(0), 3), Rat(4)) + scale(poly_pow(var(1), 2), Rat(27));
    if (disc != expected)
        throw InternalInconsistencyError("calibrated discriminant does not match 4a^3 + 27b^2");
    return d;
}

}  // namespace

const AronholdData& aronhold() {
    static const AronholdData data = build_aronhold();
    return data;
}

}  // namespace ncp2
