#pragma once

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ncp2/fields.hpp"
#include "ncp2/matrix.hpp"

namespace ncp2 {

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken by the lexicographically larger exponent vector. Iterating a term
/// map therefore starts at the leading term, which fixes a unique canonical
/// form and a stable serialization order.
struct GrlexDesc {
    bool operator()(const std::vector<int>& x, const std::vector<int>& y) const {
        int dx = std::accumulate(x.begin(), x.end(), 0);
        int dy = std::accumulate(y.begin(), y.end(), 0);
        if (dx != dy) return dx > dy;
        return x > y;
    }
};

/// Sparse multivariate polynomial over one of the exact fields. Terms map
/// exponent vectors (length = arity) to nonzero coefficients; zero
/// coefficients are never stored, so equality is structural.
template <class F>
struct Poly {
    using Elt = typename F::Elt;
    using Term = std::pair<std::vector<int>, Elt>;

    F field;
    int nvars = 0;
    std::map<std::vector<int>, Elt, GrlexDesc> terms;

    Poly(const F& f, int n) : field(f), nvars(n) {
        if (n < 0) throw InvalidInputError("negative polynomial arity");
    }

    static Poly constant(const F& f, int n, const Elt& c) {
        Poly p(f, n);
        if (!f.is_zero(c)) p.terms.emplace(std::vector<int>(n, 0), c);
        return p;
    }

    static Poly variable(const F& f, int n, int i) {
        if (i < 0 || i >= n) throw InvalidInputError("variable index out of range");
        Poly p(f, n);
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.terms.emplace(std::move(e), f.one());
        return p;
    }

    static Poly monomial(const F& f, const std::vector<int>& exps, const Elt& c) {
        Poly p(f, static_cast<int>(exps.size()));
        for (int e : exps)
            if (e < 0) throw InvalidInputError("negative exponent");
        if (!f.is_zero(c)) p.terms.emplace(exps, c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const Poly& o) const {
        if (nvars != o.nvars || terms.size() != o.terms.size()) return false;
        auto it = terms.begin(), jt = o.terms.begin();
        for (; it != terms.end(); ++it, ++jt)
            if (it->first != jt->first || !field.eq(it->second, jt->second)) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void check_compatible(const Poly& o) const {
        if (nvars != o.nvars) throw InvalidInputError("polynomial arity mismatch");
        if (!field.same_field(o.field)) throw FieldMismatchError("polynomials over different fields");
    }

    void add_term(const std::vector<int>& e, const Elt& c) {
        if (static_cast<int>(e.size()) != nvars) throw InvalidInputError("exponent arity mismatch");
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!field.is_zero(c)) terms.emplace(e, c);
        } else {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) terms.erase(it);
        }
    }

    Elt coeff(const std::vector<int>& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? field.zero() : it->second;
    }

    int total_degree() const {
        // Leading term comes first in grlex-descending order.
        if (terms.empty()) return -1;
        const auto& e = terms.begin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = total_degree();
        for (const auto& [e, c] : terms)
            if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
        return true;
    }

    Elt eval(const std::vector<Elt>& point) const {
        if (static_cast<int>(point.size()) != nvars)
            throw InvalidInputError("evaluation point arity mismatch");
        const F& f = field;
        Elt acc = f.zero();
        for (const auto& [e, c] : terms) {
            Elt t = c;
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) t = f.mul(t, point[i]);
            acc = f.add(acc, t);
        }
        return acc;
    }

    Poly derivative(int var) const {
        if (var < 0 || var >= nvars) throw InvalidInputError("variable index out of range");
        Poly out(field, nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            std::vector<int> d = e;
            d[var] -= 1;
            out.add_term(d, field.mul(c, field.from_int(e[var])));
        }
        return out;
    }
};

template <class F>
Poly<F> operator+(const Poly<F>& x, const Poly<F>& y) {
    x.check_compatible(y);
    Poly<F> out = x;
    for (const auto& [e, c] : y.terms) out.add_term(e, c);
    return out;
}

template <class F>
Poly<F> operator-(const Poly<F>& x) {
    Poly<F> out(x.field, x.nvars);
    for (const auto& [e, c] : x.terms) out.terms.emplace(e, x.field.neg(c));
    return out;
}

template <class F>
Poly<F> operator-(const Poly<F>& x, const Poly<F>& y) {
    return x + (-y);
}

template <class F>
Poly<F> scale(const Poly<F>& x, const typename F::Elt& c) {
    Poly<F> out(x.field, x.nvars);
    if (x.field.is_zero(c)) return out;
    for (const auto& [e, k] : x.terms) out.terms.emplace(e, x.field.mul(k, c));
    return out;
}

template <class F>
Poly<F> operator*(const Poly<F>& x, const Poly<F>& y) {
    x.check_compatible(y);
    Poly<F> out(x.field, x.nvars);
    for (const auto& [ex, cx] : x.terms)
        for (const auto& [ey, cy] : y.terms) {
            std::vector<int> e(x.nvars);
            for (int i = 0; i < x.nvars; ++i) e[i] = ex[i] + ey[i];
            out.add_term(e, x.field.mul(cx, cy));
        }
    return out;
}

template <class F>
Poly<F> poly_pow(const Poly<F>& x, int e) {
    if (e < 0) throw InvalidInputError("negative polynomial power");
    Poly<F> acc = Poly<F>::constant(x.field, x.nvars, x.field.one());
    Poly<F> base = x;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

/// Substitutes x_i -> sum_j m(i,j) x_j simultaneously for all variables.
/// m must be nvars x nvars over the same field.
template <class F>
Poly<F> subst_linear(const Poly<F>& p, const Matrix<F>& m) {
    if (m.rows != p.nvars || m.cols != p.nvars)
        throw InvalidInputError("substitution matrix shape mismatch");
    if (!p.field.same_field(m.field))
        throw FieldMismatchError("substitution matrix over a different field");
    const F& f = p.field;
    std::vector<Poly<F>> images;
    images.reserve(p.nvars);
    for (int i = 0; i < p.nvars; ++i) {
        Poly<F> li(f, p.nvars);
        for (int j = 0; j < p.nvars; ++j)
            if (!f.is_zero(m.at(i, j)))
                li.add_term(Poly<F>::variable(f, p.nvars, j).terms.begin()->first, m.at(i, j));
        images.push_back(std::move(li));
    }
    Poly<F> out(f, p.nvars);
    for (const auto& [e, c] : p.terms) {
        Poly<F> t = Poly<F>::constant(f, p.nvars, c);
        for (int i = 0; i < p.nvars; ++i)
            if (e[i]) t = t * poly_pow(images[i], e[i]);
        out = out + t;
    }
    return out;
}

/// Total degree of a term restricted to a subset of variables.
inline int degree_in(const std::vector<int>& e, const std::array<int, 3>& vars) {
    return e[vars[0]] + e[vars[1]] + e[vars[2]];
}

/// Determinant of a 3x3 matrix of polynomials, each entry homogeneous linear
/// in the three designated variables (other variables may appear in the
/// coefficients). Exact cofactor expansion; the result is a homogeneous cubic
/// in the designated variables.
template <class F>
Poly<F> det3_linear(const std::array<std::array<Poly<F>, 3>, 3>& m,
                    const std::array<int, 3>& vars) {
    const Poly<F>& p00 = m[0][0];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            p00.check_compatible(m[i][j]);
            for (const auto& [e, c] : m[i][j].terms)
                if (degree_in(e, vars) != 1)
                    throw InvalidInputError("matrix entry not homogeneous linear in the designated variables");
        }
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    return m[0][0] * minor2(1, 2, 1, 2) - m[0][1] * minor2(1, 2, 0, 2) +
           m[0][2] * minor2(1, 2, 0, 1);
}

/// Renders the polynomial in grlex-descending term order, e.g.
/// "x0^3 - 2*x0*x1 + 1". Intended for diagnostics and JSON payloads.
template <class F>
std::string poly_to_string(const Poly<F>& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.nvars)
        throw InvalidInputError("variable name list arity mismatch");
    if (p.terms.empty()) return "0";
    const F& f = p.field;
    std::string out;
    for (const auto& [e, c] : p.terms) {
        std::string cs = f.to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        std::string mono;
        for (int i = 0; i < p.nvars; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool unit_coeff = cs == "1";
        if (mono.empty()) {
            out += cs;
        } else if (unit_coeff) {
            out += mono;
        } else {
            // Parenthesize compound scalars such as "1+w" or "2/3".
            bool compound = cs.find('+') != std::string::npos ||
                            cs.find('-') != std::string::npos ||
                            cs.find(' ') != std::string::npos;
            out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return out;
}

}  // namespace ncp2
