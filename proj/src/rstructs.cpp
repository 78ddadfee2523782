#include "braidcheck/rstructs.hpp"

namespace braidcheck {

TensorOp BraidedR::eval(const Rational& u, const Rational& v) const {
    switch (kind) {
        case BRKind::Constant:
            return r_const;
        case BRKind::RationalCurrent: {
            if (u == v) throw PoleError("braided r-matrix evaluated at u = v");
            return F.op.scaled(Scalar(Rational(1) / (u - v)));
        }
        default: {
            if (u == v) throw PoleError("braided r-matrix evaluated at u = v");
            return F.op.scaled(Scalar(u / (u - v))) - r_const.scaled(Scalar(rat(1, 2)));
        }
    }
}

BraidedR rational_braided_r(const Braiding& F) {
    if (F.kind != SymmetryKind::Involutive)
        throw ValidationError("braided r-matrices need an involutive symmetry");
    return {BRKind::RationalCurrent, F, TensorOp(F.N(), 2)};
}

BraidedR trigonometric_braided_r(const Braiding& F, const TensorOp& r_const) {
    if (F.kind != SymmetryKind::Involutive)
        throw ValidationError("braided r-matrices need an involutive symmetry");
    return {BRKind::TrigonometricCurrent, F, r_const};
}

TensorOp constant_r_from_expansion(const Braiding& R, const Braiding& F) {
    if (R.kind != SymmetryKind::Hecke) throw ValidationError("expansion needs a Hecke symmetry R(q)");
    if (F.kind != SymmetryKind::Involutive) throw ValidationError("expansion needs an involutive F");
    TensorOp rr = R.op * F.op;
    if (!(rr.evaluated(rat(1)) == TensorOp::identity(R.N(), 2)))
        throw ValidationError("R(1) F != I: R does not deform F");
    return rr.derivative().evaluated(rat(1));
}

namespace {

TensorOp ov_pair(const TensorOp& A, int k, int l, const PositionContext& ctx) {
    return embed_ov_pair(A, k, l, ctx);
}

} // namespace

CheckResult check_r_properties(const BraidedR& r, int points, Rng& rng, const std::string& name) {
    PositionContext ctx2(2, r.F.op);
    PositionContext ctx3(3, r.F.op);
    json details;

    auto cybe_defect = [&](const TensorOp& r12_raw, const TensorOp& r13_raw, const TensorOp& r23_raw) {
        TensorOp r12 = ov_pair(r12_raw, 1, 2, ctx3);
        TensorOp r13 = ov_pair(r13_raw, 1, 3, ctx3);
        TensorOp r23 = ov_pair(r23_raw, 2, 3, ctx3);
        auto comm = [](const TensorOp& a, const TensorOp& b) { return a * b - b * a; };
        return comm(r12, r13) + comm(r12, r23) + comm(r13, r23);
    };

    if (r.kind == BRKind::Constant) {
        TensorOp skew = ov_pair(r.r_const, 1, 2, ctx2) + ov_pair(r.r_const, 2, 1, ctx2) -
                        r.F.op.scaled(Scalar(2));
        if (!skew.is_zero()) {
            details["relation"] = "r_ov12 + r_ov21 = 2F";
            details["witness"] = entry_witness(skew);
            return CheckResult::fail(name, details);
        }
        TensorOp cybe = cybe_defect(r.r_const, r.r_const, r.r_const);
        if (!cybe.is_zero()) {
            details["relation"] = "braided CYBE";
            details["witness"] = entry_witness(cybe);
            return CheckResult::fail(name, details);
        }
        return CheckResult::pass(name, details);
    }

    details["points"] = points;
    int done = 0;
    while (done < points) {
        Rational u = rng.rational(), v = rng.rational(), w = rng.rational();
        if (u == v || u == w || v == w) continue;
        TensorOp skew = ov_pair(r.eval(u, v), 1, 2, ctx2) + ov_pair(r.eval(v, u), 2, 1, ctx2);
        if (!skew.is_zero()) {
            details["relation"] = "r_ov21(v,u) + r_ov12(u,v) = 0";
            details["point"] = {rational_str(u), rational_str(v)};
            details["witness"] = entry_witness(skew);
            return CheckResult::fail(name, details);
        }
        TensorOp cybe = cybe_defect(r.eval(u, v), r.eval(u, w), r.eval(v, w));
        if (!cybe.is_zero()) {
            details["relation"] = "braided CYBE";
            details["point"] = {rational_str(u), rational_str(v), rational_str(w)};
            details["witness"] = entry_witness(cybe);
            return CheckResult::fail(name, details);
        }
        ++done;
    }
    return CheckResult::pass(name, details);
}

TensorOp schouten_defect(const BraidedR& A, const BraidedR& B, const Rational& u, const Rational& v,
                         const Rational& w) {
    PositionContext ctx(3, A.F.op);
    auto comm = [](const TensorOp& a, const TensorOp& b) { return a * b - b * a; };
    TensorOp a12 = ov_pair(A.eval(u, v), 1, 2, ctx);
    TensorOp a13 = ov_pair(A.eval(u, w), 1, 3, ctx);
    TensorOp a23 = ov_pair(A.eval(v, w), 2, 3, ctx);
    TensorOp b12 = ov_pair(B.eval(u, v), 1, 2, ctx);
    TensorOp b13 = ov_pair(B.eval(u, w), 1, 3, ctx);
    TensorOp b23 = ov_pair(B.eval(v, w), 2, 3, ctx);
    return comm(a12, b13) + comm(a12, b23) + comm(a13, b23) + comm(b12, a13) + comm(b12, a23) +
           comm(b13, a23);
}

CheckResult check_commutation(const Braiding& R, const Braiding& F, const BraidedR& r, int samples, Rng& rng,
                              const std::string& name) {
    if (F.kind != SymmetryKind::Involutive)
        throw ValidationError("the commutation identities need an involutive F");
    if (!is_compatible(R.op, F.op)) throw ValidationError("the pair (R, F) is not compatible");
    PositionContext ctx(3, F.op);
    TensorOp rrc = R.op * F.op;
    json details;
    details["samples"] = samples;
    const int N = F.N();
    static const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (int s = 0; s < samples; ++s) {
        TensorOp A(N, 1);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) A.at(i, j) = Scalar(rng.rational(9));
        Rational u = rng.rational(), v = rng.rational();
        if (u == v) {
            --s;
            continue;
        }
        TensorOp rc = r.eval(u, v);
        for (const auto& p : perms) {
            int i = p[0], j = p[1], k = p[2];
            TensorOp ak = embed_ov_single(A, k, ctx);
            TensorOp rrij = ov_pair(rrc, i, j, ctx);
            TensorOp d1 = rrij * ak - ak * rrij;
            if (!d1.is_zero()) {
                details["relation"] = "RR_ov(i,j) A_ov(k) commutation";
                details["ijk"] = {i, j, k};
                details["witness"] = entry_witness(d1);
                return CheckResult::fail(name, details);
            }
            TensorOp rij = ov_pair(rc, i, j, ctx);
            TensorOp d2 = rij * ak - ak * rij;
            if (!d2.is_zero()) {
                details["relation"] = "r_ov(i,j)(u,v) A_ov(k) commutation";
                details["ijk"] = {i, j, k};
                details["witness"] = entry_witness(d2);
                return CheckResult::fail(name, details);
            }
        }
    }
    return CheckResult::pass(name, details);
}

TensorOp sklyanin_bracket(const TensorOp& X, const TensorOp& Y, const Rational& u, const Rational& v,
                          const BraidedR& r) {
    PositionContext ctx(2, r.F.op);
    TensorOp xx = embed_ov_single(X, 1, ctx) + embed_ov_single(Y, 2, ctx);
    TensorOp rc = r.eval(u, v);
    return xx * rc - rc * xx;
}

CheckResult sklyanin_skew_check(const BraidedR& r, int samples, Rng& rng, const std::string& name) {
    json details;
    details["samples"] = samples;
    const int N = r.F.N();
    int done = 0;
    while (done < samples) {
        Rational u = rng.rational(), v = rng.rational();
        if (u == v) continue;
        TensorOp X(N, 1), Y(N, 1);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                X.at(i, j) = Scalar(rng.rational(9));
                Y.at(i, j) = Scalar(rng.rational(9));
            }
        TensorOp defect =
            sklyanin_bracket(X, Y, u, v, r) + r.F.op * sklyanin_bracket(Y, X, v, u, r) * r.F.op;
        if (!defect.is_zero()) {
            details["point"] = {rational_str(u), rational_str(v)};
            details["witness"] = entry_witness(defect);
            return CheckResult::fail(name, details);
        }
        ++done;
    }
    return CheckResult::pass(name, details);
}

TensorOp sklyanin_jacobi_defect(const TensorOp& X, const TensorOp& Y, const TensorOp& Z, const Rational& u,
                                const Rational& v, const Rational& w, const BraidedR& r) {
    PositionContext ctx(3, r.F.op);
    auto nested = [&](const TensorOp& Xa, const TensorOp& Ya, const TensorOp& Za, const Rational& ua,
                      const Rational& va, const Rational& wa) {
        TensorOp xx = embed_ov_single(Xa, 1, ctx) + embed_ov_single(Ya, 2, ctx) + embed_ov_single(Za, 3, ctx);
        TensorOp r12 = ov_pair(r.eval(ua, va), 1, 2, ctx);
        TensorOp r13 = ov_pair(r.eval(ua, wa), 1, 3, ctx);
        TensorOp r23 = ov_pair(r.eval(va, wa), 2, 3, ctx);
        TensorOp c12 = xx * r12 - r12 * xx;
        TensorOp c13 = xx * r13 - r13 * xx;
        return c12 * r23 + c13 * r23 - r23 * c12 - r23 * c13;
    };
    TensorOp f12 = embed_adjacent(r.F.op, 1, 3);
    TensorOp f23 = embed_adjacent(r.F.op, 2, 3);
    TensorOp c = f12 * f23;
    TensorOp cinv = f23 * f12;
    TensorOp w0 = nested(X, Y, Z, u, v, w);
    TensorOp w1 = nested(Y, Z, X, v, w, u);
    TensorOp w2 = nested(Z, X, Y, w, u, v);
    return w0 + c * w1 * cinv + cinv * w2 * c;
}

CheckResult sklyanin_jacobi_check(const BraidedR& r, int triples, int points, Rng& rng,
                                  const std::string& name) {
    json details;
    details["triples"] = triples;
    details["points"] = points;
    const int N = r.F.N();
    for (int t = 0; t < triples; ++t) {
        TensorOp X(N, 1), Y(N, 1), Z(N, 1);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                X.at(i, j) = Scalar(rng.rational(9));
                Y.at(i, j) = Scalar(rng.rational(9));
                Z.at(i, j) = Scalar(rng.rational(9));
            }
        int done = 0;
        while (done < points) {
            Rational u = rng.rational(), v = rng.rational(), w = rng.rational();
            if (u == v || u == w || v == w) continue;
            TensorOp defect = sklyanin_jacobi_defect(X, Y, Z, u, v, w, r);
            if (!defect.is_zero()) {
                details["point"] = {rational_str(u), rational_str(v), rational_str(w)};
                details["witness"] = entry_witness(defect);
                return CheckResult::fail(name, details);
            }
            ++done;
        }
    }
    return CheckResult::pass(name, details);
}

} // namespace braidcheck
