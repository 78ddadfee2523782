#pragma once

#include "braidcheck/currents.hpp"

namespace braidcheck {

/*
 * Braided classical r-matrices over an involutive symmetry F:
 *   rational current:       r(u,v) = F/(u-v)
 *   constant:               r = d/dq (R(q) F) at q = 1, for a Hecke R(q)
 *                           deforming F (R(1) F = I)
 *   trigonometric current:  r(u,v) = F u/(u-v) - r_const/2
 */
enum class BRKind { RationalCurrent, Constant, TrigonometricCurrent };

struct BraidedR {
    BRKind kind = BRKind::RationalCurrent;
    Braiding F;
    TensorOp r_const; // constant part (Constant / TrigonometricCurrent)

    // Current evaluation; Constant ignores the parameters.
    TensorOp eval(const Rational& u, const Rational& v) const;
};

BraidedR rational_braided_r(const Braiding& F);
BraidedR trigonometric_braided_r(const Braiding& F, const TensorOp& r_const);

// r from the first-order expansion of RR(q) = R(q) F at q = 1 (exact
// derivative); requires R(1) F = I.
TensorOp constant_r_from_expansion(const Braiding& R, const Braiding& F);

/*
 * Structure checks: skew-symmetry
 *   current:  r_{ov21}(v,u) + r_{ov12}(u,v) = 0
 *   constant: r_{ov12} + r_{ov21} = 2F
 * and the braided classical Yang-Baxter sum
 *   [r_{ov12}, r_{ov13}] + [r_{ov12}, r_{ov23}] + [r_{ov13}, r_{ov23}] = 0
 * on V^{(x)3}, at exact sample points for current kinds.
 */
CheckResult check_r_properties(const BraidedR& r, int points, Rng& rng, const std::string& name = "r_properties");

/*
 * Braided Schouten bracket of A and B at (u,v,w): the six-term sum
 *   [A_{ov12}(u,v), B_{ov13}(u,w)] + [A_{ov12}(u,v), B_{ov23}(v,w)]
 * + [A_{ov13}(u,w), B_{ov23}(v,w)] + (A <-> B).
 * Constant operands ignore their parameters.
 */
TensorOp schouten_defect(const BraidedR& A, const BraidedR& B, const Rational& u, const Rational& v,
                         const Rational& w);

/*
 * Commutation of transported operators with one-slot matrices:
 *   RR_{ov ij} A_{ov k} = A_{ov k} RR_{ov ij}   (RR = R F)
 *   r_{ov ij}(u,v) A_{ov k} = A_{ov k} r_{ov ij}(u,v)
 * for all pairwise distinct (i,j,k) <= 3 and random A.
 */
CheckResult check_commutation(const Braiding& R, const Braiding& F, const BraidedR& r, int samples, Rng& rng,
                              const std::string& name = "commutation");

/*
 * Braided Sklyanin bracket of one-slot matrices X, Y:
 *   bracket(X,Y,u,v) = [X_{ov1} + Y_{ov2}, r(u,v)]   on V (x) V.
 */
TensorOp sklyanin_bracket(const TensorOp& X, const TensorOp& Y, const Rational& u, const Rational& v,
                          const BraidedR& r);

// Condition 1: bracket(X,Y,u,v) = -F bracket(Y,X,v,u) F.
CheckResult sklyanin_skew_check(const BraidedR& r, int samples, Rng& rng,
                                const std::string& name = "sklyanin_skew");

/*
 * Condition 2 (Jacobi): the nested-bracket reduction
 *   W = ([XX, r_{ov12}(u,v)] + [XX, r_{ov13}(u,w)]) r_{ov23}(v,w)
 *     - r_{ov23}(v,w) ([XX, r_{ov12}(u,v)] + [XX, r_{ov13}(u,w)]),
 *   XX = X_{ov1} + Y_{ov2} + Z_{ov3},
 * summed over its three cyclic images (arguments cycled together with
 * conjugation by F12 F23 / F23 F12) must vanish for arbitrary X, Y, Z.
 */
TensorOp sklyanin_jacobi_defect(const TensorOp& X, const TensorOp& Y, const TensorOp& Z, const Rational& u,
                                const Rational& v, const Rational& w, const BraidedR& r);

CheckResult sklyanin_jacobi_check(const BraidedR& r, int triples, int points, Rng& rng,
                                  const std::string& name = "sklyanin_jacobi");

} // namespace braidcheck
