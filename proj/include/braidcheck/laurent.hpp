#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidcheck/rational.hpp"

namespace braidcheck {

/*
 * Laurent polynomial in a single variable q with exact rational
 * coefficients. Zero coefficients are pruned after every operation, so
 * equality is structural.
 */
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c) {
        if (c != 0) c_[0] = c;
    }
    Laurent(long c) : Laurent(Rational(c)) {}

    static Laurent q_power(int k, const Rational& coef = Rational(1)) {
        Laurent p;
        if (coef != 0) p.c_[k] = coef;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    // Lowest / highest exponent; only meaningful when nonzero.
    int min_deg() const { return c_.begin()->first; }
    int max_deg() const { return c_.rbegin()->first; }

    const Rational& coeff(int k) const {
        static const Rational zero(0);
        auto it = c_.find(k);
        return it == c_.end() ? zero : it->second;
    }

    const std::map<int, Rational>& coeffs() const { return c_; }

    Rational constant_term() const { return coeff(0); }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [k, v] : o.c_) {
            auto it = c_.find(k);
            if (it == c_.end()) {
                c_.emplace(k, v);
            } else {
                it->second += v;
                if (it->second == 0) c_.erase(it);
            }
        }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [k, v] : o.c_) {
            auto it = c_.find(k);
            if (it == c_.end()) {
                c_.emplace(k, -v);
            } else {
                it->second -= v;
                if (it->second == 0) c_.erase(it);
            }
        }
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) {
                auto it = r.c_.find(ka + kb);
                if (it == r.c_.end()) {
                    r.c_.emplace(ka + kb, va * vb);
                } else {
                    it->second += va * vb;
                }
            }
        for (auto it = r.c_.begin(); it != r.c_.end();)
            it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
        return r;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [k, v] : r.c_) v = -v;
        return r;
    }

    Laurent& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= s;
        return *this;
    }

    // Multiply by q^k (shift all exponents).
    Laurent shifted(int k) const {
        Laurent r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    // Exact evaluation at rational q0 (q0 != 0 required when negative
    // exponents are present).
    Rational evaluate(const Rational& q0) const {
        Rational acc(0);
        for (const auto& [k, v] : c_) {
            if (k < 0 && q0 == 0) throw SingularError("Laurent polynomial evaluated at q=0");
            acc += v * pow_rational(q0, k);
        }
        return acc;
    }

    // d/dq, exact: c q^k -> c k q^{k-1}.
    Laurent derivative() const {
        Laurent r;
        for (const auto& [k, v] : c_) {
            if (k == 0) continue;
            r.c_.emplace(k - 1, v * k);
        }
        return r;
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return c_ < o.c_; }

private:
    std::map<int, Rational> c_; // exponent -> nonzero coefficient
};

// q-number k_q = (q^k - q^{-k})/(q - q^{-1}) = q^{k-1} + q^{k-3} + ... + q^{1-k}.
inline Laurent q_number(int k) {
    Laurent r;
    for (int j = 0; j < k; ++j) r += Laurent::q_power(k - 1 - 2 * j);
    return r;
}

} // namespace braidcheck
