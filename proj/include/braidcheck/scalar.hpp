#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidcheck/laurent.hpp"

namespace braidcheck {

/*
 * Exact scalar of the tensor algebra: an element of the field Q(q),
 * stored as a reduced fraction of Laurent polynomials.
 *
 * Values that enter or leave the library (matrix files, reports) always
 * have denominator 1, i.e. are plain rationals or Laurent polynomials in
 * q; proper fractions only arise in intermediate symbolic computations
 * (symmetrizer recurrences, skew-inverse solves).
 *
 * Canonical form: den is an ordinary polynomial in q with nonzero
 * constant term, leading coefficient 1, and gcd(num, den) = 1. Equality
 * is structural.
 */
class Scalar {
public:
    Scalar() : den_(Rational(1)) {}
    Scalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    Scalar(long c) : num_(Rational(c)), den_(Rational(1)) {}
    Scalar(const Laurent& num) : num_(num), den_(Rational(1)) {}
    Scalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Scalar q() { return Scalar(Laurent::q_power(1)); }
    static Scalar q_pow(int k) { return Scalar(Laurent::q_power(k)); }
    // Symmetric q-number [k]_q.
    static Scalar q_num(int k) { return Scalar(q_number(k)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Laurent(Rational(1)) && num_ == Laurent(Rational(1)); }
    bool is_laurent() const { return den_ == Laurent(Rational(1)); }
    bool is_rational() const { return is_laurent() && num_.is_constant(); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    const Laurent& as_laurent() const {
        if (!is_laurent()) throw Error("scalar is not a Laurent polynomial: " + debug_string());
        return num_;
    }
    Rational as_rational() const {
        if (!is_rational()) throw Error("scalar is not rational: " + debug_string());
        return num_.constant_term();
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_laurent() && b.is_laurent()) {
            Scalar r;
            r.num_ = a.num_ + b.num_;
            return r;
        }
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_laurent() && b.is_laurent()) {
            Scalar r;
            r.num_ = a.num_ - b.num_;
            return r;
        }
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.is_laurent() && b.is_laurent()) {
            Scalar r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw SingularError("scalar division by zero");
        if (a.is_zero()) return Scalar();
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw SingularError("inverse of zero scalar");
        return Scalar(den_, num_);
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    // Exact evaluation at q = q0.
    Rational evaluate(const Rational& q0) const {
        Rational d = den_.evaluate(q0);
        if (d == 0) throw SingularError("scalar denominator vanishes at the given q");
        return num_.evaluate(q0) / d;
    }
    Scalar evaluated(const Rational& q0) const { return Scalar(evaluate(q0)); }

    // Exact d/dq.
    Scalar derivative() const {
        if (is_laurent()) return Scalar(num_.derivative());
        return Scalar(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string debug_string() const;

private:
    void normalize();

    Laurent num_;
    Laurent den_;
};

namespace detail {

// Dense coefficient vector of an ordinary polynomial (index = exponent).
using Poly = std::vector<Rational>;

inline Poly to_poly(const Laurent& l, int shift) {
    Poly p;
    if (l.is_zero()) return p;
    p.assign(static_cast<std::size_t>(l.max_deg() - shift) + 1, Rational(0));
    for (const auto& [k, v] : l.coeffs()) p[static_cast<std::size_t>(k - shift)] = v;
    return p;
}

inline Laurent from_poly(const Poly& p, int shift) {
    Laurent l;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) l += Laurent::q_power(static_cast<int>(i) + shift, p[i]);
    return l;
}

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean remainder of a by b (b nonzero), over Q.
inline Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

// Exact quotient a / b; remainder must vanish.
inline Poly poly_quot_exact(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    if (!a.empty()) throw Error("inexact polynomial division");
    return q;
}

// Monic gcd over Q[q].
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            Rational lc = b.back();
            for (auto& c : b) c /= lc;
        }
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

} // namespace detail

inline void Scalar::normalize() {
    if (den_.is_zero()) throw SingularError("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        // common fast path: just rescale
        Rational c = den_.constant_term();
        if (c != 1) {
            num_ *= 1 / c;
            den_ = Laurent(Rational(1));
        }
        return;
    }
    int dshift = den_.min_deg();
    int nshift = num_.min_deg() - dshift; // residual q-power carried by num
    detail::Poly dp = detail::to_poly(den_, dshift);
    detail::Poly np = detail::to_poly(num_, num_.min_deg());
    detail::Poly g = detail::poly_gcd(np, dp);
    if (g.size() > 1) {
        np = detail::poly_quot_exact(np, g);
        dp = detail::poly_quot_exact(dp, g);
    }
    Rational lc = dp.back();
    if (lc != 1)
        for (auto& c : np) c /= lc;
    if (lc != 1)
        for (auto& c : dp) c /= lc;
    num_ = detail::from_poly(np, nshift);
    den_ = detail::from_poly(dp, 0);
    if (den_.is_constant()) {
        Rational c = den_.constant_term();
        if (c != 1) {
            num_ *= 1 / c;
            den_ = Laurent(Rational(1));
        }
    }
}

} // namespace braidcheck
