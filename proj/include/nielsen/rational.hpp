#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "nielsen/errors.hpp"

namespace nielsen {

using Int = mpz_class;
/// Exact rational. GMP keeps results of arithmetic canonical (lowest terms,
/// positive denominator, zero as 0/1); only hand-built values need
/// canonicalize().
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with an optional leading sign. Anything else
/// (decimal points, exponents, whitespace inside) is rejected.
inline Rat parse_rat(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Int(std::string(s), 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError("not an exact rational: '" + std::string(text) + "'");
        return Rat(to_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || den.empty() || den.front() == '-' || den.front() == '+' || !is_int(den))
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    Int d = to_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rat(to_int(num), d);
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

inline Rat rat_pow(const Rat& base, unsigned exponent) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rat(num, den);
}

inline Int int_pow(const Int& base, unsigned exponent) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

} // namespace nielsen
