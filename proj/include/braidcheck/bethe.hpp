#pragma once

#include "braidcheck/freealg.hpp"

namespace braidcheck {

/*
 * Skew-symmetrizer tower A^(k) of a Hecke or involutive symmetry R,
 * built by the recurrence
 *   A^(1) = I,
 *   A^(k+1) = (k_q/(k+1)_q) A^(k) (q^k/k_q I - R_{k,k+1}) A^(k),
 * with q = 1 in the involutive case. Idempotency is verified on
 * construction. Throws SingularError when a q-number vanishes at the
 * evaluation point.
 */
TensorOp skew_symmetrizer_op(const Braiding& R, int k, const std::optional<Rational>& q0 = std::nullopt);

// u^{-m} coefficients of a noncommutative series, m >= 0.
using NCSeries = std::map<int, NCPoly>;

// f(u) -> f(c u): coefficient m picks up c^{-m}.
NCSeries series_scale_arg(const NCSeries& s, const Scalar& c, int K);
// f(u) -> f(u - c), expanded exactly up to order K.
NCSeries series_shift_arg(const NCSeries& s, const Rational& c, int K);
// product with truncation at order K (coefficient order preserved).
NCSeries series_mul(const NCSeries& a, const NCSeries& b, int K);
NCSeries series_scale(const NCSeries& s, const Scalar& c);
NCSeries series_add(const NCSeries& a, const NCSeries& b);

/*
 * Everything needed to evaluate quantum symmetric polynomials in a
 * truncated generalized Yangian: the compatible pair, the kind, the
 * F-trace weights, the truncation order, and the optional numeric q.
 */
struct BetheContext {
    Braiding R;
    Braiding F;
    RKind kind = RKind::Rational;
    int K = 0;
    bool t0_identity = false;
    Scalar qval = Scalar::q();
    SkewInverse si;

    static BetheContext make(const Braiding& R, const Braiding& F, RKind kind, int K,
                             bool t0_identity = false,
                             const std::optional<Rational>& q0 = std::nullopt);
};

struct BetheElement {
    char family = 'e'; // 'e' or 'p'
    int k = 0;
    RKind kind = RKind::Rational;
    int K = 0;
    NCSeries coeff; // m -> u^{-m} coefficient, exact for m <= K

    const NCPoly& at(int m) const {
        static const NCPoly zero;
        auto it = coeff.find(m);
        return it == coeff.end() ? zero : it->second;
    }
};

/*
 * Quantum elementary symmetric polynomial
 *   e_k(u) = Tr_{F(1..k)} A^(k) T_{ov1}(u) T_{ov2}(su) ... T_{ovk}(s^{k-1}u)
 * with multiplicative shifts s = q^{-2} (trigonometric) or additive
 * shifts u - 1 per step (rational); e_0(u) = 1.
 */
BetheElement elementary_symmetric(const BetheContext& ctx, int k);

/*
 * Quantum power sum
 *   p_k(u) = Tr_{F(1..k)} T_{ov1}(s^{k-1}u) ... T_{ovk}(u) R_{k-1} ... R_1,
 * shifts as above; p_0(u) = 1.
 */
BetheElement power_sum(const BetheContext& ctx, int k);

// Power sum in the reduced single-space form available when F = R:
// Tr_F T(s^{k-1}u) ... T(u).
BetheElement power_sum_reduced(const BetheContext& ctx, int k);

/*
 * Newton-identity defect series, identically zero in the algebra:
 *   trig:     k_q e_k(u) + sum_j (-1)^j q^{k-j} p_j(q^{-2(k-j)}u) e_{k-j}(u)
 *   rational: k  e_k(u) + sum_j (-1)^j p_j(u-(k-j)) e_{k-j}(u)
 * Returned as the u^{-m} coefficient polynomials for m <= K.
 */
NCSeries newton_defect(const BetheContext& ctx, int k);

/*
 * Certify [e_k(u), e_p(v)] = 0 coefficient by coefficient: for every
 * bi-degree (a,b) <= bound the coefficient polynomial is run through
 * ideal_membership against the defining relations. The report lists
 * VERIFIED/INCONCLUSIVE per (a,b) with certificates; any INCONCLUSIVE
 * makes the overall status inconclusive (never silently dropped).
 */
struct BetheCertifyConfig {
    int k = 1;
    int p = 1;
    int bound_a = 1;
    int bound_b = 1;
    std::optional<int> level_bound;  // default: a + b + 1 per coefficient
    std::optional<int> relations_K;  // default: ctx.K + 1 (relations of the
                                     // same algebra at a deeper truncation)
    std::vector<Rational> q_points;  // used when coefficients are symbolic in q
    bool keep_certificates = true;
};

CheckResult bethe_commutator_certify(const BetheContext& ctx, const BetheCertifyConfig& cfg);

// Newton defect coefficients as ideal members (k = 1 is the identically
// zero defect and is asserted to vanish as free polynomials).
CheckResult newton_defect_certify(const BetheContext& ctx, int k, std::optional<int> level_bound = std::nullopt,
                                  const std::vector<Rational>& q_points = {});

/*
 * Evaluation oracle for the plain RTT case (R = F = P, rational kind):
 * substitutes the generator matrix by an exact numeric solution of the
 * defining relations built from the flip,
 *   T(u) = B (I - P/(u - c)),
 * i.e. t_i^j[0] -> B_ij I and t_i^j[m] -> -c^{m-1} B_i. e_j. for m >= 1,
 * with B a seeded random matrix (B = I under the T[0]=I convention).
 * Words evaluate to products of N x N rational matrices; every defining
 * relation must evaluate to zero, which the test suites assert.
 */
struct RttEvalOracle {
    int N = 0;
    int K = 0;
    std::vector<TensorOp> values; // indexed by GenId, arity-1 matrices

    TensorOp eval(const NCPoly& poly) const;
};

RttEvalOracle make_rtt_eval_oracle(int N, int K, std::uint64_t seed, bool t0_identity = false);

} // namespace braidcheck
