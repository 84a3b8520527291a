#pragma once

#include <cstdint>
#include <string>

#include "ncp2/errors.hpp"
#include "ncp2/rational.hpp"

namespace ncp2 {

/// Element of Q(w) with w^2 + w + 1 = 0, stored on the basis {1, w}.
struct Cyc {
    Rat a;  ///< rational part
    Rat b;  ///< coefficient of w

    bool operator==(const Cyc& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    bool operator<(const Cyc& o) const { return a != o.a ? a < o.a : b < o.b; }
};

/// The field of exact rationals.
///
/// All three field types expose the same value-level interface (Elt, zero,
/// one, add, ..., parse, to_string) so linear algebra and polynomial code can
/// be written once and instantiated per field.
struct RationalField {
    using Elt = Rat;

    static constexpr const char* name() { return "rational"; }
    static unsigned long characteristic() { return 0; }
    bool same_field(const RationalField&) const { return true; }

    Elt zero() const { return Rat(0); }
    Elt one() const { return Rat(1); }
    Elt from_int(long n) const { return Rat(n); }
    Elt from_rat(const Rat& r) const { return r; }

    Elt add(const Elt& x, const Elt& y) const { return x + y; }
    Elt sub(const Elt& x, const Elt& y) const { return x - y; }
    Elt mul(const Elt& x, const Elt& y) const { return x * y; }
    Elt neg(const Elt& x) const { return -x; }
    Elt inv(const Elt& x) const {
        if (x == 0) throw InvalidInputError("division by zero");
        return 1 / x;
    }
    Elt div(const Elt& x, const Elt& y) const { return mul(x, inv(y)); }

    bool is_zero(const Elt& x) const { return x == 0; }
    bool eq(const Elt& x, const Elt& y) const { return x == y; }

    bool has_omega() const { return false; }
    Elt omega() const { throw InvalidInputError("Q contains no primitive cube root of unity"); }

    std::string to_string(const Elt& x) const { return rat_to_string(x); }
    Elt parse(const std::string& s) const { return parse_rat(s); }
};

/// The cyclotomic field Q(w), w^2 + w + 1 = 0.
struct CyclotomicField {
    using Elt = Cyc;

    static constexpr const char* name() { return "cyclotomic"; }
    static unsigned long characteristic() { return 0; }
    bool same_field(const CyclotomicField&) const { return true; }

    Elt zero() const { return {Rat(0), Rat(0)}; }
    Elt one() const { return {Rat(1), Rat(0)}; }
    Elt from_int(long n) const { return {Rat(n), Rat(0)}; }
    Elt from_rat(const Rat& r) const { return {r, Rat(0)}; }

    Elt add(const Elt& x, const Elt& y) const { return {x.a + y.a, x.b + y.b}; }
    Elt sub(const Elt& x, const Elt& y) const { return {x.a - y.a, x.b - y.b}; }
    /// (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
    Elt mul(const Elt& x, const Elt& y) const {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    Elt neg(const Elt& x) const { return {-x.a, -x.b}; }
    /// Conjugation w -> w^2 = -1 - w, i.e. (a, b) -> (a - b, -b).
    Elt conj(const Elt& x) const { return {x.a - x.b, -x.b}; }
    /// Inverse via the norm x * conj(x) = a^2 - a b + b^2 > 0 for x != 0.
    Elt inv(const Elt& x) const {
        Rat n = x.a * x.a - x.a * x.b + x.b * x.b;
        if (n == 0) throw InvalidInputError("division by zero");
        return {(x.a - x.b) / n, -x.b / n};
    }
    Elt div(const Elt& x, const Elt& y) const { return mul(x, inv(y)); }

    bool is_zero(const Elt& x) const { return x.a == 0 && x.b == 0; }
    bool eq(const Elt& x, const Elt& y) const { return x == y; }

    bool has_omega() const { return true; }
    Elt omega() const { return {Rat(0), Rat(1)}; }

    /// "a", "bw", or "a+bw" / "a-bw" with rational a, b; unit coefficients of
    /// w print as "w" / "-w".
    std::string to_string(const Elt& x) const {
        if (x.b == 0) return rat_to_string(x.a);
        Rat mag = abs(x.b);
        std::string wpart = (mag == 1 ? "" : rat_to_string(mag)) + "w";
        if (x.a == 0) return (x.b < 0 ? "-" : "") + wpart;
        return rat_to_string(x.a) + (x.b < 0 ? "-" : "+") + wpart;
    }

    Elt parse(const std::string& s) const {
        if (s.empty()) throw InvalidInputError("empty cyclotomic literal");
        auto wpos = s.find('w');
        if (wpos == std::string::npos) return {parse_rat(s), Rat(0)};
        if (wpos + 1 != s.size())
            throw InvalidInputError("bad cyclotomic literal: '" + s + "'");
        std::string body = s.substr(0, wpos);
        // Split off the trailing rational coefficient of w: the split sign is
        // the last '+' or '-' that does not open the string or follow '/'.
        size_t split = std::string::npos;
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            std::string coef = body.empty() || body == "+" ? "1" : (body == "-" ? "-1" : body);
            return {Rat(0), parse_rat(coef)};
        }
        std::string apart = body.substr(0, split);
        std::string bpart = body.substr(split);  // keeps the sign
        if (bpart == "+" || bpart == "-") bpart += "1";
        return {parse_rat(apart), parse_rat(bpart)};
    }
};

/// The prime field F_p, p prime, p != 3 (characteristic 3 is excluded
/// throughout). Elements are canonical residues in [0, p).
struct PrimeField {
    using Elt = std::uint64_t;

    std::uint64_t p = 0;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (p < 2 || p == 3) throw InvalidInputError("modulus must be a prime different from 3");
        if (p > (1ull << 31)) throw InvalidInputError("modulus too large (limit 2^31)");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw InvalidInputError("modulus is not prime");
    }

    static constexpr const char* name() { return "prime"; }
    unsigned long characteristic() const { return static_cast<unsigned long>(p); }
    bool same_field(const PrimeField& o) const { return p == o.p; }

    Elt zero() const { return 0; }
    Elt one() const { return 1 % p; }
    Elt from_int(long n) const {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elt>(r);
    }
    Elt from_rat(const Rat& r) const {
        Int den = r.get_den();
        Int dm = den % static_cast<unsigned long>(p);
        if (dm == 0)
            throw InvalidInputError("rational denominator not invertible mod " + std::to_string(p));
        Int num = r.get_num() % static_cast<long>(p);
        if (num < 0) num += static_cast<long>(p);
        return mul(num.get_ui(), inv(dm.get_ui()));
    }

    Elt add(Elt x, Elt y) const { return (x + y) % p; }
    Elt sub(Elt x, Elt y) const { return (x + p - y) % p; }
    Elt mul(Elt x, Elt y) const { return (x * y) % p; }
    Elt neg(Elt x) const { return x == 0 ? 0 : p - x; }
    Elt pow(Elt x, std::uint64_t e) const {
        Elt r = one(), b = x % p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Elt inv(Elt x) const {
        if (x % p == 0) throw InvalidInputError("division by zero mod " + std::to_string(p));
        return pow(x, p - 2);
    }
    Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }

    bool is_zero(Elt x) const { return x % p == 0; }
    bool eq(Elt x, Elt y) const { return x % p == y % p; }

    bool has_omega() const { return p % 3 == 1; }
    /// Smallest w in [2, p) with w^2 + w + 1 = 0; exists iff p = 1 mod 3.
    Elt omega() const {
        if (!has_omega())
            throw InvalidInputError("F_" + std::to_string(p) + " contains no primitive cube root of unity");
        for (Elt w = 2; w < p; ++w)
            if ((w * w + w + 1) % p == 0) return w;
        throw InternalInconsistencyError("cube root of unity not found despite p = 1 mod 3");
    }

    std::string to_string(Elt x) const { return std::to_string(x % p) + " mod " + std::to_string(p); }

    /// Accepts "v mod p" (the modulus must match) or a bare integer "v".
    Elt parse(const std::string& s) const {
        auto mpos = s.find(" mod ");
        std::string vs = s.substr(0, mpos);
        if (mpos != std::string::npos) {
            std::string ps = s.substr(mpos + 5);
            if (ps != std::to_string(p))
                throw FieldMismatchError("residue written mod " + ps + " used in F_" + std::to_string(p));
        }
        try {
            Int v(vs);
            Int r = v % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            return r.get_ui();
        } catch (const std::invalid_argument&) {
            throw InvalidInputError("bad residue literal: '" + s + "'");
        }
    }
};

}  // namespace ncp2
