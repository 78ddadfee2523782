#include "braidcheck/currents.hpp"

#include "braidcheck/bethe.hpp"

namespace braidcheck {

TensorOp CurrentR::eval(const Rational& u, const Rational& v) const {
    if (u == v) throw PoleError("current R-matrix evaluated at u = v");
    TensorOp id = TensorOp::identity(base.N(), 2);
    if (kind == RKind::Rational) {
        Scalar c = Scalar(Rational(1) / (u - v));
        return base.op - c * id;
    }
    Scalar c = (qval - qval.inverse()) * Scalar(u / (u - v));
    return base.op - c * id;
}

CurrentR baxterize(const Braiding& B, RKind kind, const std::optional<Rational>& q0) {
    if (kind == RKind::Rational && B.kind != SymmetryKind::Involutive)
        throw ValidationError("rational Baxterization needs an involutive symmetry");
    if (kind == RKind::Trigonometric && B.kind != SymmetryKind::Hecke)
        throw ValidationError("trigonometric Baxterization needs a Hecke symmetry");
    CurrentR rc;
    rc.kind = kind;
    if (q0) {
        if (*q0 == 0 || *q0 == 1 || *q0 == -1) throw ValidationError("q must avoid {0, 1, -1}");
        rc.base = B.evaluated(*q0);
        rc.qval = Scalar(*q0);
    } else {
        rc.base = B;
        rc.qval = Scalar::q();
    }
    return rc;
}

CheckResult check_param_ybe(const CurrentR& rc, const std::vector<std::array<Rational, 3>>& points,
                            const std::string& name) {
    json details;
    details["points"] = points.size();
    for (const auto& [u, v, w] : points) {
        TensorOp r_uv_12 = embed_adjacent(rc.eval(u, v), 1, 3);
        TensorOp r_uw_23 = embed_adjacent(rc.eval(u, w), 2, 3);
        TensorOp r_vw_12 = embed_adjacent(rc.eval(v, w), 1, 3);
        TensorOp r_vw_23 = embed_adjacent(rc.eval(v, w), 2, 3);
        TensorOp r_uw_12 = embed_adjacent(rc.eval(u, w), 1, 3);
        TensorOp r_uv_23 = embed_adjacent(rc.eval(u, v), 2, 3);
        TensorOp defect = r_uv_12 * r_uw_23 * r_vw_12 - r_vw_23 * r_uw_12 * r_uv_23;
        if (!defect.is_zero()) {
            details["point"] = {rational_str(u), rational_str(v), rational_str(w)};
            details["witness"] = entry_witness(defect);
            return CheckResult::fail(name, details);
        }
    }
    return CheckResult::pass(name, details);
}

Scalar NormalizedR::f(const Rational& u, const Rational& v) const {
    if (u == v) throw PoleError("normalization factor evaluated at u = v");
    if (kind == RKind::Rational) return Scalar(Rational(1) - Rational(1) / (u - v));
    return qval - (qval - qval.inverse()) * Scalar(u / (u - v));
}

TensorOp NormalizedR::eval(const Rational& u, const Rational& v) const {
    Scalar fv = f(u, v);
    if (fv.is_zero()) throw PoleError("normalization factor vanishes at the given point");
    CurrentR rc{kind, R, qval};
    return (rc.eval(u, v) * F.op).scaled(fv.inverse());
}

NormalizedR normalized_R(const Braiding& R, const Braiding& F, RKind kind, const std::optional<Rational>& q0) {
    if (F.kind != SymmetryKind::Involutive)
        throw ValidationError("unitarized current matrices need an involutive transport braiding");
    NormalizedR rr;
    rr.kind = kind;
    if (q0) {
        if (*q0 == 0 || *q0 == 1 || *q0 == -1) throw ValidationError("q must avoid {0, 1, -1}");
        rr.R = R.evaluated(*q0);
        rr.qval = Scalar(*q0);
    } else {
        rr.R = R;
        rr.qval = Scalar::q();
    }
    rr.F = F;
    if (kind == RKind::Rational && R.kind != SymmetryKind::Involutive)
        throw ValidationError("rational kind needs an involutive symmetry");
    if (kind == RKind::Trigonometric && R.kind != SymmetryKind::Hecke)
        throw ValidationError("trigonometric kind needs a Hecke symmetry");
    if (!is_compatible(rr.R.op, rr.F.op)) throw ValidationError("the pair (R, F) is not compatible");
    return rr;
}

CheckResult check_unitarity(const NormalizedR& rr, int points, Rng& rng, const std::string& name) {
    json details;
    details["points"] = points;
    TensorOp id = TensorOp::identity(rr.R.N(), 2);
    int done = 0;
    while (done < points) {
        Rational u = rng.rational(), v = rng.rational();
        if (u == v) continue;
        try {
            TensorOp a = rr.eval(u, v);
            TensorOp b = rr.F.op * rr.eval(v, u) * rr.F.op; // RR_{ov 21}(v,u)
            TensorOp defect = a * b - id;
            if (!defect.is_zero()) {
                details["point"] = {rational_str(u), rational_str(v)};
                details["witness"] = entry_witness(defect);
                return CheckResult::fail(name, details);
            }
        } catch (const PoleError&) {
            continue; // resample
        }
        ++done;
    }
    return CheckResult::pass(name, details);
}

CheckResult hqa_degeneration(const Braiding& B) {
    if (B.kind != SymmetryKind::Hecke)
        throw ValidationError("the degeneration check applies to Hecke symmetries with q not +-1");
    std::string name = "hqa_degeneration(" + B.name + ")";
    Scalar q = Scalar::q();
    // (q - q^-1) u / (u - q^-2 u) is independent of u and collapses to q
    Scalar u(1);
    Scalar coef = (q - q.inverse()) * u / (u - q.pow(-2) * u);
    TensorOp id = TensorOp::identity(B.N(), 2);
    TensorOp degen = B.op - coef * id;

    json details;
    TensorOp d1 = degen - (B.op - q * id);
    if (!d1.is_zero()) {
        details["identity"] = "R(u, q^-2 u) = R - qI";
        details["witness"] = entry_witness(d1);
        return CheckResult::fail(name, details);
    }
    TensorOp a2 = skew_symmetrizer_op(B, 2);
    TensorOp d2 = degen + (q + q.inverse()) * a2;
    if (!d2.is_zero()) {
        details["identity"] = "R - qI = -(q + q^-1) A2";
        details["witness"] = entry_witness(d2);
        return CheckResult::fail(name, details);
    }
    return CheckResult::pass(name, details);
}

} // namespace braidcheck
