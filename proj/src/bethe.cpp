#include "braidcheck/bethe.hpp"

#include "braidcheck/rng.hpp"

namespace braidcheck {

namespace {

Scalar qnum_scalar(int k, const Scalar& q) {
    Scalar acc;
    for (int j = 0; j < k; ++j) acc += q.pow(k - 1 - 2 * j);
    return acc;
}

} // namespace

TensorOp skew_symmetrizer_op(const Braiding& R, int k, const std::optional<Rational>& q0) {
    if (k < 1) throw ValidationError("symmetrizer order must be >= 1");
    if (R.kind == SymmetryKind::Generic)
        throw ValidationError("symmetrizers need an involutive or Hecke symmetry");
    Scalar q;
    TensorOp rop = R.op;
    if (R.kind == SymmetryKind::Involutive) {
        q = Scalar(1);
    } else if (q0) {
        if (*q0 == 0 || *q0 == 1 || *q0 == -1) throw ValidationError("q must avoid {0, 1, -1}");
        q = Scalar(*q0);
        rop = rop.evaluated(*q0);
    } else {
        q = Scalar::q();
    }
    const int N = R.N();
    TensorOp A = TensorOp::identity(N, 1);
    for (int j = 1; j < k; ++j) {
        Scalar kq = qnum_scalar(j, q);
        Scalar kq1 = qnum_scalar(j + 1, q);
        if (kq.is_zero() || kq1.is_zero())
            throw SingularError("q-number vanishes at the evaluation point; symmetrizer undefined");
        TensorOp a_emb = embed_adjacent(A, 1, j + 1);
        TensorOp mid =
            q.pow(j) * TensorOp::identity(N, j + 1) - kq * embed_adjacent(rop, j, j + 1);
        A = (a_emb * mid * a_emb).scaled(kq1.inverse());
    }
    if (!((A * A) == A)) throw ValidationError("computed symmetrizer is not idempotent");
    return A;
}

NCSeries series_scale_arg(const NCSeries& s, const Scalar& c, int K) {
    NCSeries r;
    for (const auto& [m, poly] : s) {
        if (m > K) continue;
        NCPoly p = poly.scaled(c.pow(-m));
        if (!p.is_zero()) r.emplace(m, std::move(p));
    }
    return r;
}

NCSeries series_shift_arg(const NCSeries& s, const Rational& c, int K) {
    // f(u - c): u^{-m'} contributes binom(m-1, m-m') c^{m-m'} u^{-m}
    // for every m >= m' >= 1; the m' = 0 coefficient is untouched.
    NCSeries r;
    for (const auto& [mp, poly] : s) {
        if (poly.is_zero()) continue;
        if (mp == 0) {
            r[0] += poly;
            continue;
        }
        for (int m = mp; m <= K; ++m) {
            Rational coef =
                Rational(binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(m - mp))) *
                pow_rational(c, m - mp);
            if (coef == 0) continue;
            NCPoly p = poly.scaled(Scalar(coef));
            if (!p.is_zero()) {
                r[m] += p;
                if (r[m].is_zero()) r.erase(m);
            }
        }
    }
    return r;
}

NCSeries series_mul(const NCSeries& a, const NCSeries& b, int K) {
    NCSeries r;
    for (const auto& [ma, pa] : a) {
        if (ma > K) continue;
        for (const auto& [mb, pb] : b) {
            if (ma + mb > K) break;
            NCPoly p = pa * pb;
            if (!p.is_zero()) {
                r[ma + mb] += p;
                if (r[ma + mb].is_zero()) r.erase(ma + mb);
            }
        }
    }
    return r;
}

NCSeries series_scale(const NCSeries& s, const Scalar& c) {
    NCSeries r;
    if (c.is_zero()) return r;
    for (const auto& [m, poly] : s) r.emplace(m, poly.scaled(c));
    return r;
}

NCSeries series_add(const NCSeries& a, const NCSeries& b) {
    NCSeries r = a;
    for (const auto& [m, poly] : b) {
        r[m] += poly;
        if (r[m].is_zero()) r.erase(m);
    }
    return r;
}

namespace {

// matrix with NCSeries entries, dim = N^arity
struct NCSMat {
    int dim = 0;
    std::vector<NCSeries> e;

    explicit NCSMat(int d = 0) : dim(d), e(static_cast<std::size_t>(d) * d) {}
    NCSeries& at(int r, int c) { return e[static_cast<std::size_t>(r) * dim + c]; }
    const NCSeries& at(int r, int c) const { return e[static_cast<std::size_t>(r) * dim + c]; }
};

NCSMat mul(const TensorOp& a, const NCSMat& b, int K) {
    NCSMat r(b.dim);
    for (int i = 0; i < b.dim; ++i)
        for (int k = 0; k < b.dim; ++k) {
            const Scalar& s = a.at(i, k);
            if (s.is_zero()) continue;
            for (int j = 0; j < b.dim; ++j) {
                const NCSeries& bs = b.at(k, j);
                if (bs.empty()) continue;
                r.at(i, j) = series_add(r.at(i, j), series_scale(bs, s));
            }
        }
    (void)K;
    return r;
}

NCSMat mul(const NCSMat& a, const TensorOp& b, int K) {
    NCSMat r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const NCSeries& as = a.at(i, k);
            if (as.empty()) continue;
            for (int j = 0; j < a.dim; ++j) {
                const Scalar& s = b.at(k, j);
                if (s.is_zero()) continue;
                r.at(i, j) = series_add(r.at(i, j), series_scale(as, s));
            }
        }
    (void)K;
    return r;
}

NCSMat mul(const NCSMat& a, const NCSMat& b, int K) {
    NCSMat r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const NCSeries& as = a.at(i, k);
            if (as.empty()) continue;
            for (int j = 0; j < a.dim; ++j) {
                const NCSeries& bs = b.at(k, j);
                if (bs.empty()) continue;
                r.at(i, j) = series_add(r.at(i, j), series_mul(as, bs, K));
            }
        }
    return r;
}

NCSeries nctrace(const NCSMat& a) {
    NCSeries t;
    for (int i = 0; i < a.dim; ++i) t = series_add(t, a.at(i, i));
    return t;
}

// T(u) as an N x N series matrix, with the argument transformed for the
// given slot: multiplicative shift u -> q^{-2 s} u or additive u -> u - s.
NCSMat base_T(const BetheContext& ctx, int shift_steps) {
    const int N = ctx.R.N();
    NCSMat t(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            NCSeries s;
            for (int m = 0; m <= ctx.K; ++m)
                s.emplace(m, NCPoly::generator(make_gen(i + 1, j + 1, m, N)));
            if (shift_steps > 0) {
                if (ctx.kind == RKind::Trigonometric) {
                    s = series_scale_arg(s, ctx.qval.pow(-2 * shift_steps), ctx.K);
                } else {
                    s = series_shift_arg(s, Rational(shift_steps), ctx.K);
                }
            }
            t.at(i, j) = std::move(s);
        }
    return t;
}

// base embedded at slot 1 of V^{(x) k}
NCSMat embed_first(const NCSMat& base, int N, int k) {
    int rest = 1;
    for (int i = 1; i < k; ++i) rest *= N;
    NCSMat r(base.dim * rest);
    for (int i = 0; i < base.dim; ++i)
        for (int j = 0; j < base.dim; ++j) {
            const NCSeries& s = base.at(i, j);
            if (s.empty()) continue;
            for (int t = 0; t < rest; ++t) r.at(i * rest + t, j * rest + t) = s;
        }
    return r;
}

// conjugating chain G_j = F_{j-1,j} ... F_{12} on V^{(x) k} and its inverse
std::pair<TensorOp, TensorOp> transport_chain(const Braiding& F, int j, int k) {
    const int N = F.N();
    TensorOp g = TensorOp::identity(N, k);
    TensorOp ginv = TensorOp::identity(N, k);
    TensorOp finv = (F.op * F.op == TensorOp::identity(N, 2)) ? F.op : F.op.inverse();
    for (int jj = 2; jj <= j; ++jj) {
        g = embed_adjacent(F.op, jj - 1, k) * g;
        ginv = ginv * embed_adjacent(finv, jj - 1, k);
    }
    return {g, ginv};
}

NCSMat t_ov_slot(const BetheContext& ctx, int slot, int k, int shift_steps) {
    NCSMat m = embed_first(base_T(ctx, shift_steps), ctx.R.N(), k);
    auto [g, ginv] = transport_chain(ctx.F, slot, k);
    return mul(mul(g, m, ctx.K), ginv, ctx.K);
}

TensorOp f_trace_weight(const BetheContext& ctx, int k) {
    TensorOp w = TensorOp::identity(ctx.R.N(), k);
    for (int j = 1; j <= k; ++j) w = embed_plain(ctx.si.c, j, k) * w;
    return w;
}

} // namespace

BetheContext BetheContext::make(const Braiding& R, const Braiding& F, RKind kind, int K, bool t0_identity,
                                const std::optional<Rational>& q0) {
    BetheContext ctx;
    ctx.kind = kind;
    ctx.K = K;
    ctx.t0_identity = t0_identity;
    if (q0) {
        if (*q0 == 0 || *q0 == 1 || *q0 == -1) throw ValidationError("q must avoid {0, 1, -1}");
        ctx.R = R.evaluated(*q0);
        ctx.F = F.evaluated(*q0);
        ctx.qval = Scalar(*q0);
    } else {
        ctx.R = R;
        ctx.F = F;
        ctx.qval = (kind == RKind::Trigonometric) ? Scalar::q() : Scalar(1);
    }
    if (kind == RKind::Rational && ctx.R.kind != SymmetryKind::Involutive)
        throw ValidationError("rational kind needs an involutive symmetry");
    if (kind == RKind::Trigonometric && ctx.R.kind != SymmetryKind::Hecke)
        throw ValidationError("trigonometric kind needs a Hecke symmetry");
    if (!is_compatible(ctx.R.op, ctx.F.op)) throw ValidationError("the pair (R, F) is not compatible");
    ctx.si = skew_inverse(ctx.F.op);
    return ctx;
}

BetheElement elementary_symmetric(const BetheContext& ctx, int k) {
    BetheElement e;
    e.family = 'e';
    e.k = k;
    e.kind = ctx.kind;
    e.K = ctx.K;
    if (k == 0) {
        e.coeff.emplace(0, NCPoly(Scalar(1)));
        return e;
    }
    std::optional<Rational> q0;
    if (ctx.R.kind == SymmetryKind::Hecke && ctx.qval.is_rational()) q0 = ctx.qval.as_rational();
    TensorOp A = skew_symmetrizer_op(ctx.R, k, q0);
    NCSMat prod = mul(A, t_ov_slot(ctx, 1, k, 0), ctx.K);
    for (int j = 2; j <= k; ++j) prod = mul(prod, t_ov_slot(ctx, j, k, j - 1), ctx.K);
    prod = mul(f_trace_weight(ctx, k), prod, ctx.K);
    e.coeff = nctrace(prod);
    return e;
}

BetheElement power_sum(const BetheContext& ctx, int k) {
    BetheElement p;
    p.family = 'p';
    p.k = k;
    p.kind = ctx.kind;
    p.K = ctx.K;
    if (k == 0) {
        p.coeff.emplace(0, NCPoly(Scalar(1)));
        return p;
    }
    NCSMat prod = t_ov_slot(ctx, 1, k, k - 1);
    for (int j = 2; j <= k; ++j) prod = mul(prod, t_ov_slot(ctx, j, k, k - j), ctx.K);
    TensorOp rchain = TensorOp::identity(ctx.R.N(), k);
    for (int j = k - 1; j >= 1; --j) rchain = rchain * embed_adjacent(ctx.R.op, j, k);
    prod = mul(prod, rchain, ctx.K);
    prod = mul(f_trace_weight(ctx, k), prod, ctx.K);
    p.coeff = nctrace(prod);
    return p;
}

BetheElement power_sum_reduced(const BetheContext& ctx, int k) {
    if (!(ctx.R.op == ctx.F.op))
        throw ValidationError("the reduced power-sum form needs F = R");
    BetheElement p;
    p.family = 'p';
    p.k = k;
    p.kind = ctx.kind;
    p.K = ctx.K;
    if (k == 0) {
        p.coeff.emplace(0, NCPoly(Scalar(1)));
        return p;
    }
    NCSMat prod = base_T(ctx, k - 1);
    for (int j = 2; j <= k; ++j) prod = mul(prod, base_T(ctx, k - j), ctx.K);
    prod = mul(ctx.si.c, prod, ctx.K);
    p.coeff = nctrace(prod);
    return p;
}

NCSeries newton_defect(const BetheContext& ctx, int k) {
    std::vector<BetheElement> es, ps;
    for (int j = 0; j <= k; ++j) es.push_back(elementary_symmetric(ctx, j));
    ps.push_back(BetheElement{});
    for (int j = 1; j <= k; ++j) ps.push_back(power_sum(ctx, j));

    NCSeries defect;
    if (ctx.kind == RKind::Trigonometric) {
        defect = series_scale(es[static_cast<std::size_t>(k)].coeff, qnum_scalar(k, ctx.qval));
        for (int j = 1; j <= k; ++j) {
            NCSeries pj = series_scale_arg(ps[static_cast<std::size_t>(j)].coeff, ctx.qval.pow(-2 * (k - j)), ctx.K);
            NCSeries term = series_mul(pj, es[static_cast<std::size_t>(k - j)].coeff, ctx.K);
            Scalar c = ctx.qval.pow(k - j);
            if (j % 2) c = -c;
            defect = series_add(defect, series_scale(term, c));
        }
    } else {
        defect = series_scale(es[static_cast<std::size_t>(k)].coeff, Scalar(k));
        for (int j = 1; j <= k; ++j) {
            NCSeries pj = series_shift_arg(ps[static_cast<std::size_t>(j)].coeff, Rational(k - j), ctx.K);
            NCSeries term = series_mul(pj, es[static_cast<std::size_t>(k - j)].coeff, ctx.K);
            defect = series_add(defect, series_scale(term, Scalar(j % 2 ? -1 : 1)));
        }
    }
    return defect;
}

CheckResult bethe_commutator_certify(const BetheContext& ctx, const BetheCertifyConfig& cfg) {
    std::string name = "bethe_commute(e" + std::to_string(cfg.k) + ",e" + std::to_string(cfg.p) + ")";
    if (cfg.bound_a > ctx.K || cfg.bound_b > ctx.K)
        throw ValidationError("bi-degree bound exceeds the truncation order K");
    BetheElement ek = elementary_symmetric(ctx, cfg.k);
    BetheElement ep = (cfg.p == cfg.k) ? ek : elementary_symmetric(ctx, cfg.p);
    int krel = cfg.relations_K ? *cfg.relations_K : ctx.K + 1;
    RelationSet rels = defining_relations(ctx.R, ctx.F, ctx.kind, krel, ctx.t0_identity, ctx.qval);

    json details;
    details["relations"] = rels.rels.size();
    details["relations_K"] = krel;
    auto coefficients = json::array();
    bool any_inconclusive = false;
    for (int a = 0; a <= cfg.bound_a; ++a)
        for (int b = 0; b <= cfg.bound_b; ++b) {
            NCPoly comm = ek.at(a) * ep.at(b) - ep.at(b) * ek.at(a);
            int lb = cfg.level_bound ? *cfg.level_bound : a + b + 1;
            MembershipOutcome mo = ideal_membership(comm, rels, lb, cfg.q_points);
            json cj;
            cj["a"] = a;
            cj["b"] = b;
            cj["status"] = mo.verified ? "VERIFIED" : "INCONCLUSIVE";
            cj["terms"] = comm.size();
            if (mo.verified && cfg.keep_certificates) {
                auto certs = json::array();
                for (const auto& c : mo.certs) certs.push_back(certificate_to_json(c, ctx.R.N()));
                cj["certificates"] = certs;
            }
            if (!mo.verified) any_inconclusive = true;
            coefficients.push_back(cj);
        }
    details["coefficients"] = coefficients;
    if (any_inconclusive) return CheckResult::inconclusive(name, details);
    return CheckResult::pass(name, details);
}

CheckResult newton_defect_certify(const BetheContext& ctx, int k, std::optional<int> level_bound,
                                  const std::vector<Rational>& q_points) {
    std::string name = "newton_defect(k=" + std::to_string(k) + "," + rkind_str(ctx.kind) + ")";
    NCSeries defect = newton_defect(ctx, k);
    json details;
    if (k == 1) {
        // e_1 = p_1 by construction; the defect must vanish identically
        for (const auto& [m, poly] : defect)
            if (!poly.is_zero()) {
                details["order"] = m;
                details["poly"] = poly.str(ctx.R.N());
                return CheckResult::fail(name, details);
            }
        details["identically_zero"] = true;
        return CheckResult::pass(name, details);
    }
    RelationSet rels = defining_relations(ctx.R, ctx.F, ctx.kind, ctx.K + 1, ctx.t0_identity, ctx.qval);
    auto coefficients = json::array();
    bool any_inconclusive = false;
    for (int m = 0; m <= ctx.K; ++m) {
        auto it = defect.find(m);
        NCPoly poly = (it == defect.end()) ? NCPoly() : it->second;
        int lb = level_bound ? *level_bound : m + 1;
        MembershipOutcome mo = ideal_membership(poly, rels, lb, q_points);
        json cj;
        cj["m"] = m;
        cj["status"] = mo.verified ? "VERIFIED" : "INCONCLUSIVE";
        if (!mo.verified) any_inconclusive = true;
        coefficients.push_back(cj);
    }
    details["coefficients"] = coefficients;
    if (any_inconclusive) return CheckResult::inconclusive(name, details);
    return CheckResult::pass(name, details);
}

TensorOp RttEvalOracle::eval(const NCPoly& poly) const {
    TensorOp acc(N, 1);
    for (const auto& [w, c] : poly.terms()) {
        TensorOp prod = TensorOp::identity(N, 1);
        for (GenId g : w) {
            if (g >= values.size()) throw ValidationError("generator outside the oracle's level range");
            prod = prod * values[g];
        }
        acc = acc + prod.scaled(Scalar(c.as_rational()));
    }
    return acc;
}

RttEvalOracle make_rtt_eval_oracle(int N, int K, std::uint64_t seed, bool t0_identity) {
    RttEvalOracle o;
    o.N = N;
    o.K = K;
    Rng rng(seed);
    // T(u) = B (I - P/(u - c)); B seeded (identity under the T[0]=I flag)
    std::vector<std::vector<Rational>> B(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t0_identity ? Rational(i == j ? 1 : 0) : rng.nonzero_rational(9);
    Rational c = rng.nonzero_rational(5);

    o.values.assign(static_cast<std::size_t>(N) * N * (K + 1), TensorOp(N, 1));
    for (int m = 0; m <= K; ++m)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                TensorOp v(N, 1);
                if (m == 0) {
                    const Rational& b = B[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                    if (b != 0)
                        for (int r = 0; r < N; ++r) v.at(r, r) = Scalar(b);
                } else {
                    Rational f = -pow_rational(c, m - 1);
                    for (int s = 0; s < N; ++s) {
                        Rational entry = f * B[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s)];
                        if (entry != 0) v.at(j - 1, s) = Scalar(entry);
                    }
                }
                o.values[make_gen(i, j, m, N)] = v;
            }
    return o;
}

} // namespace braidcheck
