#pragma once

#include "braidcheck/currents.hpp"
#include "braidcheck/rstructs.hpp"

namespace braidcheck {

/*
 * Numeric matrix g entering the braided KZ connections. Validated
 * against g_{ov1} g_{ov2} = g_{ov2} g_{ov1}, equivalently
 *   F g_1 F g_1 = g_1 F g_1 F,
 * and, for difference (qKZ) systems, additionally against
 *   [R, g_{ov1} g_{ov2}] = 0.
 */
struct GMatrix {
    TensorOp g; // arity 1
    Braiding F;
    bool qkz_ready = false;
};

GMatrix validate_g(const TensorOp& g, const Braiding& F,
                   const std::optional<Braiding>& R = std::nullopt); // throws ValidationError

/*
 * Braided KZ connection coefficients on V^{(x) n}:
 *   rational:       M_i = g_{ov i} + kappa sum_{k != i} F_{ov ik}/(u_i - u_k)
 *   trigonometric:  N_i = g_{ov i} + kappa sum_{k != i} (F_{ov ik} u_i/(u_i - u_k) - r_{ov ik}/2)
 * evaluated exactly at pairwise-distinct rational points.
 */
struct KZConnection {
    RKind kind = RKind::Rational;
    int n = 2;
    Rational kappa;
    TensorOp g;
    Braiding F;
    TensorOp r_const; // trigonometric only

    TensorOp eval(int i, const std::vector<Rational>& u) const;
    // closed-form partial_i of the i-dependent part of M_j (or u_i d_i N_j)
    TensorOp derivative_term(int i, int j, const std::vector<Rational>& u) const;
};

KZConnection build_connection(RKind kind, int n, const Rational& kappa, const GMatrix& g,
                              const std::optional<TensorOp>& r_const = std::nullopt);

// Zero-curvature defect d_i M_j - d_j M_i - [M_i, M_j] (rational) or
// u_i d_i N_j - u_j d_j N_i - [N_i, N_j] (trigonometric); exactly zero
// for validated g at every pole-free point.
TensorOp curvature_defect(const KZConnection& conn, int i, int j, const std::vector<Rational>& u);

/*
 * Quantum KZ difference system: kappa M_i(u) with
 *   M_i(u) = RR_{ov i,i-1}(s_i u_i, u_{i-1}) ... RR_{ov i,1}(s_i u_i, u_1)
 *            g_{ov i}
 *            RR_{ov i,n}(u_i, u_n) ... RR_{ov i,i+1}(u_i, u_{i+1})
 * where s_i u_i = u_i + p (rational) or p u_i (trigonometric) and RR is
 * the unitarized current matrix of the compatible pair.
 */
struct QKZSystem {
    NormalizedR rr;
    int n = 2;
    TensorOp g;
    Rational p;
    Rational kappa;

    std::vector<Rational> shifted(const std::vector<Rational>& u, int i) const;
    TensorOp eval(int i, const std::vector<Rational>& u) const;
};

QKZSystem build_qkz(const Braiding& R, const Braiding& F, RKind kind, int n, const GMatrix& g,
                    const Rational& p, const Rational& kappa,
                    const std::optional<Rational>& q0 = std::nullopt);

// Testing hook: assemble the system without validating g (for negative
// controls that must produce a nonzero defect).
QKZSystem build_qkz_unchecked(const Braiding& R, const Braiding& F, RKind kind, int n, const TensorOp& g,
                              const Rational& p, const Rational& kappa,
                              const std::optional<Rational>& q0 = std::nullopt);

// Holonomy defect M_j(s_i u) M_i(u) - M_i(s_j u) M_j(u); exactly zero at
// every admissible point when g satisfies both structure conditions.
TensorOp holonomy_defect(const QKZSystem& sys, int i, int j, const std::vector<Rational>& u);

} // namespace braidcheck
