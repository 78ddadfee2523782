#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "braidcheck/errors.hpp"

namespace braidcheck {

// Exact rational number. GMP keeps values canonical (reduced, positive
// denominator) as long as arithmetic goes through mpq_class operators.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Strict "p" | "p/s" parser (s > 0 not required on input; result canonical).
// `base_offset` shifts reported byte offsets when the literal is embedded in
// a larger string.
inline Rational parse_rational(const std::string& s, std::size_t base_offset = 0) {
    std::size_t i = 0;
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what, base_offset + i);
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    digits("integer");
    if (i < s.size() && s[i] == '/') {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        digits("denominator");
    }
    if (i != s.size()) throw ParseError("trailing characters in rational", base_offset + i);
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational", base_offset);
    if (r.get_den() == 0) throw ParseError("zero denominator", base_offset);
    r.canonicalize();
    return r;
}

// n! and binomial(n, k) as exact integers.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv) {
        if (b == 0) throw SingularError("0 raised to a negative power");
        b = 1 / b;
    }
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace braidcheck
