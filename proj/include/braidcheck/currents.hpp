#pragma once

#include <optional>
#include <vector>

#include "braidcheck/braidings.hpp"
#include "braidcheck/report.hpp"
#include "braidcheck/rng.hpp"

namespace braidcheck {

enum class RKind { Rational, Trigonometric };

inline const char* rkind_str(RKind k) { return k == RKind::Rational ? "rational" : "trigonometric"; }

/*
 * Current R-matrix obtained by Baxterizing a constant symmetry:
 *   rational (involutive R):       R(u,v) = R - I/(u-v)
 *   trigonometric (Hecke R):       R(u,v) = R - (q - q^-1) u I/(u-v)
 * Evaluation is exact at rational (u,v), u != v. `qval` is symbolic q
 * when the base matrix is symbolic, or the evaluation point otherwise.
 */
struct CurrentR {
    RKind kind;
    Braiding base;
    Scalar qval;

    TensorOp eval(const Rational& u, const Rational& v) const;
};

// The kind must match the symmetry class of B (involutive -> rational,
// Hecke -> trigonometric); anything else throws ValidationError.
CurrentR baxterize(const Braiding& B, RKind kind, const std::optional<Rational>& q0 = std::nullopt);

// Parameterized Yang-Baxter check
//   R12(u,v) R23(u,w) R12(v,w) = R23(v,w) R12(u,w) R23(u,v)
// at every listed point; failures carry the point and an entry witness.
CheckResult check_param_ybe(const CurrentR& rc, const std::vector<std::array<Rational, 3>>& points,
                            const std::string& name = "param_ybe");

/*
 * Unitarized current R-matrix RR(u,v) = R(u,v) F f(u,v)^{-1} with
 *   f = 1 - 1/(u-v)            (rational)
 *   f = q - (q - q^-1)u/(u-v)  (trigonometric),
 * normalized so that RR_{ov 12}(u,v) RR_{ov 21}(v,u) = I.
 */
struct NormalizedR {
    RKind kind;
    Braiding R;
    Braiding F;
    Scalar qval;

    Scalar f(const Rational& u, const Rational& v) const;
    TensorOp eval(const Rational& u, const Rational& v) const; // throws PoleError when f = 0 or u = v
};

NormalizedR normalized_R(const Braiding& R, const Braiding& F, RKind kind,
                         const std::optional<Rational>& q0 = std::nullopt);

CheckResult check_unitarity(const NormalizedR& rr, int points, Rng& rng, const std::string& name = "unitarity");

/*
 * Degeneration of the trigonometric current matrix at v = q^{-2} u:
 *   R(u, q^{-2}u) = R - qI = -(q + q^{-1}) A2
 * where A2 is the rank-2 skew-symmetrizer from the recurrence. Both
 * identities are checked symbolically in q.
 */
CheckResult hqa_degeneration(const Braiding& B);

} // namespace braidcheck
