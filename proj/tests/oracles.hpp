#pragma once

// Test-only oracles, deliberately independent of the library kernels they
// check: raw index loops instead of TensorOp algebra, and a local
// coefficient-map derivative instead of Scalar::derivative.

#include <vector>

#include "braidcheck/rng.hpp"
#include "braidcheck/tensor_op.hpp"

namespace braidcheck::testing {

inline int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::vector<int> digits(int idx, int N, int n) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int s = n - 1; s >= 0; --s) {
        d[static_cast<std::size_t>(s)] = idx % N;
        idx /= N;
    }
    return d;
}

inline int undigits(const std::vector<int>& d, int N) {
    int idx = 0;
    for (int x : d) idx = idx * N + x;
    return idx;
}

// Partial trace by raw index contraction.
inline TensorOp partial_trace_oracle(const TensorOp& X, const std::vector<int>& slots) {
    int N = X.N(), n = X.arity();
    std::vector<bool> traced(static_cast<std::size_t>(n) + 1, false);
    for (int s : slots) traced[static_cast<std::size_t>(s)] = true;
    std::vector<int> kept;
    for (int s = 1; s <= n; ++s)
        if (!traced[static_cast<std::size_t>(s)]) kept.push_back(s);
    int m = static_cast<int>(kept.size());
    TensorOp out(N, m);
    for (int r = 0; r < X.dim(); ++r) {
        auto rd = digits(r, N, n);
        for (int c = 0; c < X.dim(); ++c) {
            if (X.at(r, c).is_zero()) continue;
            auto cd = digits(c, N, n);
            bool diag = true;
            for (int s = 1; s <= n; ++s)
                if (traced[static_cast<std::size_t>(s)] &&
                    rd[static_cast<std::size_t>(s - 1)] != cd[static_cast<std::size_t>(s - 1)])
                    diag = false;
            if (!diag) continue;
            std::vector<int> rk, ck;
            for (int s : kept) {
                rk.push_back(rd[static_cast<std::size_t>(s - 1)]);
                ck.push_back(cd[static_cast<std::size_t>(s - 1)]);
            }
            out.at(undigits(rk, N), undigits(ck, N)) += X.at(r, c);
        }
    }
    return out;
}

// Tr_{F(1..k)} X by raw contraction of the weight product C_1 ... C_k X.
inline TensorOp f_trace_oracle(const TensorOp& X, int k, const TensorOp& C) {
    int N = X.N(), n = X.arity();
    TensorOp out(N, n - k);
    int rest = ipow(N, n - k);
    int tr = ipow(N, k);
    for (int rr = 0; rr < rest; ++rr)
        for (int cc = 0; cc < rest; ++cc) {
            Scalar acc;
            // sum over row indices a (traced slots) and the C contraction
            // index b: (C1..Ck X)_{(a,rr),(a,cc)} = prod C[a_s b_s] X[(b,rr),(a,cc)]
            for (int a = 0; a < tr; ++a) {
                auto ad = digits(a, N, k);
                for (int b = 0; b < tr; ++b) {
                    auto bd = digits(b, N, k);
                    Scalar w = Scalar(1);
                    bool zero = false;
                    for (int s = 0; s < k; ++s) {
                        const Scalar& c = C.at(ad[static_cast<std::size_t>(s)], bd[static_cast<std::size_t>(s)]);
                        if (c.is_zero()) {
                            zero = true;
                            break;
                        }
                        w *= c;
                    }
                    if (zero) continue;
                    const Scalar& x = X.at(b * rest + rr, a * rest + cc);
                    if (!x.is_zero()) acc += w * x;
                }
            }
            out.at(rr, cc) = acc;
        }
    return out;
}

// Entrywise d/dq from the raw coefficient maps.
inline TensorOp derivative_oracle(const TensorOp& X) {
    TensorOp out(X.N(), X.arity());
    for (int r = 0; r < X.dim(); ++r)
        for (int c = 0; c < X.dim(); ++c) {
            const Scalar& s = X.at(r, c);
            if (s.is_zero()) continue;
            Laurent d;
            for (const auto& [k, v] : s.as_laurent().coeffs())
                if (k != 0) d += Laurent::q_power(k - 1, v * k);
            out.at(r, c) = Scalar(d);
        }
    return out;
}

inline TensorOp random_matrix(int N, Rng& rng, long bound = 9) {
    TensorOp a(N, 1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) a.at(i, j) = Scalar(rng.rational(bound));
    return a;
}

inline TensorOp random_op2(int N, Rng& rng, long bound = 9) {
    TensorOp a(N, 2);
    for (int i = 0; i < N * N; ++i)
        for (int j = 0; j < N * N; ++j) a.at(i, j) = Scalar(rng.rational(bound));
    return a;
}

} // namespace braidcheck::testing
