#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ncp2/errors.hpp"

namespace ncp2 {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a reduced rational with positive denominator.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "n" when the denominator is 1, "n/d" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n" or "n/d" (optional leading sign, arbitrary precision).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw InvalidInputError("empty rational literal");
    // GMP rejects an explicit leading '+'.
    std::string body = s[0] == '+' ? s.substr(1) : s;
    if (body.empty()) throw InvalidInputError("bad rational literal: '" + s + "'");
    Rat r;
    if (r.set_str(body, 10) != 0) throw InvalidInputError("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw InvalidInputError("zero denominator in literal: '" + s + "'");
    r.canonicalize();
    return r;
}

/// Exact integer n-th root: returns x with x^n = v when one exists.
inline std::optional<Int> exact_root(const Int& v, unsigned long n) {
    if (n == 0) return std::nullopt;
    if (v < 0 && n % 2 == 0) return std::nullopt;
    Int root;
    int exactness = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
    if (exactness != 0) return root;
    return std::nullopt;
}

/// Exact rational n-th root, when one exists in Q.
inline std::optional<Rat> exact_root(const Rat& v, unsigned long n) {
    auto num = exact_root(Int(v.get_num()), n);
    auto den = exact_root(Int(v.get_den()), n);
    if (!num || !den) return std::nullopt;
    return make_rat(*num, *den);
}

}  // namespace ncp2
