#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidcheck/report.hpp"
#include "braidcheck/tensor_op.hpp"

namespace braidcheck {

enum class SymmetryKind { Involutive, Hecke, Generic };

inline const char* symmetry_str(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Involutive: return "involutive";
        case SymmetryKind::Hecke: return "hecke";
        default: return "generic";
    }
}

/*
 * A braiding: invertible operator on V (x) V satisfying the braid
 * relation. `kind` is the verified symmetry class (R^2 = I, or the Hecke
 * condition (R - qI)(R + q^{-1}I) = 0).
 */
struct Braiding {
    TensorOp op;
    SymmetryKind kind = SymmetryKind::Generic;
    std::string name;

    int N() const { return op.N(); }
    // Entrywise q -> q0; the result is a numeric braiding of the same kind.
    Braiding evaluated(const Rational& q0) const { return {op.evaluated(q0), kind, name}; }
};

/*
 * Catalog entries:
 *   flip:N          usual flip P
 *   superflip:m,n   graded flip P_(m|n) on C^{m+n}
 *   dj_hecke:N      Drinfeld-Jimbo Hecke symmetry of U_q(sl(N)), symbolic q
 *   uq_sl11         the 4x4 Hecke symmetry of U_q(sl(1|1)), symbolic q
 *
 * Every catalog matrix is verified (braid relation + declared symmetry
 * class) by the unit suite; nothing is trusted by construction.
 */
Braiding catalog(const std::string& spec);
std::vector<std::string> catalog_names();

// Braid relation check on V^{(x)3}; on failure the report carries the
// first nonzero entry of the defect.
CheckResult check_braid(const TensorOp& B, const std::string& name = "braid");

// Classify as involutive / hecke / generic. Symbolic entries are tested
// with symbolic q; numeric entries need a user-supplied q0 (not 0, +-1)
// for the Hecke test.
SymmetryKind classify_symmetry(const TensorOp& B, const std::optional<Rational>& q0 = std::nullopt);

/*
 * Compatibility of (R, F):
 *   R12 F23 F12 = F23 F12 R23   and   R23 F12 F23 = F12 F23 R12,
 * plus the transport consequence R_{ov 23} = R_23. The report also
 * records (as metadata, not a pass condition) whether the two relations
 * hold with R and F swapped.
 */
CheckResult check_compatible(const Braiding& R, const Braiding& F);
bool is_compatible(const TensorOp& R, const TensorOp& F);

/*
 * Skew inverse of a braiding F: the operator Psi with
 *   Tr_(2) F_12 Psi_23 = Tr_(2) Psi_12 F_23 = P_13,
 * and the induced trace weight C = Tr_(2) Psi_12. Existence of Psi is
 * what makes the F-trace Tr_F X = Tr(C X) well defined.
 */
struct SkewInverse {
    TensorOp psi; // arity 2
    TensorOp c;   // arity 1
};

SkewInverse skew_inverse(const TensorOp& F); // throws NotSkewInvertibleError

// Tr_{F(1..k)} X = Tr_(1..k) (C_1 ... C_k X) over the first k slots of X.
TensorOp f_trace(const TensorOp& X, int k, const SkewInverse& si);

} // namespace braidcheck
