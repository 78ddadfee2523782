#pragma once

#include <cctype>
#include <string>

#include "braidcheck/scalar.hpp"

namespace braidcheck {

/*
 * Scalar literal grammar (matrix file format):
 *
 *   literal  := ['-'] term { ('+'|'-') term }
 *   term     := rational | [rational '*'] qfactor
 *   qfactor  := 'q' ['^' int]
 *   rational := int ['/' int]
 *
 * Examples: "3/2", "-5", "q - 1/1*q^-1", "2*q^3 + 1".
 * Whitespace is allowed around operators. Errors carry byte offsets.
 */
inline Scalar parse_scalar(const std::string& s, std::size_t base_offset = 0) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto parse_int = [&](const char* what) -> std::string {
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t d = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == d) throw ParseError(std::string("expected ") + what, base_offset + i);
        return s.substr(start, i - start);
    };

    Laurent acc;
    skip_ws();
    if (i == s.size()) throw ParseError("empty scalar literal", base_offset + i);
    bool first = true;
    int sign = 1;
    while (true) {
        skip_ws();
        if (first) {
            if (i < s.size() && s[i] == '-') {
                sign = -1;
                ++i;
            }
            first = false;
        } else {
            if (i == s.size()) break;
            if (s[i] == '+') {
                sign = 1;
            } else if (s[i] == '-') {
                sign = -1;
            } else {
                throw ParseError("expected '+' or '-'", base_offset + i);
            }
            ++i;
        }
        skip_ws();
        // term
        Rational coef(1);
        bool have_coef = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '+')) {
            std::string num = parse_int("integer");
            std::string lit = num;
            if (i < s.size() && s[i] == '/') {
                ++i;
                lit += "/" + parse_int("denominator");
            }
            coef = parse_rational(lit, base_offset + i - lit.size());
            have_coef = true;
        }
        int qexp = 0;
        bool have_q = false;
        std::size_t save = i;
        if (have_coef && i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
            if (i >= s.size() || s[i] != 'q') throw ParseError("expected 'q' after '*'", base_offset + i);
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            have_q = true;
            qexp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = parse_int("exponent");
                try {
                    qexp = std::stoi(e);
                } catch (...) {
                    throw ParseError("exponent out of range", base_offset + i - e.size());
                }
            }
        } else {
            i = save;
            if (!have_coef) throw ParseError("expected term", base_offset + i);
        }
        if (!have_coef && !have_q) throw ParseError("expected term", base_offset + i);
        acc += Laurent::q_power(have_q ? qexp : 0, sign * coef);
        skip_ws();
        if (i == s.size()) break;
    }
    return Scalar(acc);
}

// Canonical writer (descending powers). parse_scalar(write_scalar(x)) == x,
// and writing is idempotent on parsed values.
inline std::string write_scalar(const Scalar& x) {
    const Laurent& l = x.as_laurent();
    if (l.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = l.coeffs().rbegin(); it != l.coeffs().rend(); ++it) {
        int k = it->first;
        const Rational& c = it->second;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string piece;
        if (k == 0) {
            piece = a.get_str();
        } else {
            if (a != 1) piece = a.get_str() + "*";
            piece += "q";
            if (k != 1) piece += "^" + std::to_string(k);
        }
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

inline std::string Scalar::debug_string() const {
    auto lstr = [](const Laurent& l) {
        Scalar s(l);
        return write_scalar(s);
    };
    if (is_laurent()) return lstr(num_);
    return "(" + lstr(num_) + ")/(" + lstr(den_) + ")";
}

} // namespace braidcheck
