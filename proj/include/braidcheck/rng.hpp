#pragma once

#include <cstdint>
#include <vector>

#include "braidcheck/rational.hpp"

namespace braidcheck {

/*
 * Deterministic, platform-independent PRNG (splitmix64) for seeded
 * sampling of rational parameter points. Numerators/denominators are
 * bounded to keep bignum growth in exact identities under control.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive).
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Rational with |num| <= bound, 1 <= den <= bound.
    Rational rational(long bound = 50) {
        Rational r(uniform(-bound, bound), uniform(1, bound));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long bound = 50) {
        for (;;) {
            Rational r = rational(bound);
            if (r != 0) return r;
        }
    }

    // Pairwise distinct rationals (for spectral parameter points).
    std::vector<Rational> distinct_rationals(int count, long bound = 50);

private:
    std::uint64_t s_;
};

inline std::vector<Rational> Rng::distinct_rationals(int count, long bound) {
        std::vector<Rational> pts;
        while (static_cast<int>(pts.size()) < count) {
            Rational r = rational(bound);
            bool dup = false;
            for (const auto& p : pts)
                if (p == r) {
                    dup = true;
                    break;
                }
            if (!dup) pts.push_back(r);
        }
        return pts;
}

} // namespace braidcheck
