#include "braidcheck/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "braidcheck/matrix_json.hpp"

namespace braidcheck {

namespace {

bool is_json_path(const std::string& s) {
    return s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0;
}

} // namespace

Braiding resolve_braiding(const std::string& spec, const std::optional<Rational>& q0) {
    if (spec.rfind("file:", 0) == 0 || is_json_path(spec)) {
        std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
        TensorOp op = load_tensorop(path);
        CheckResult br = check_braid(op, spec);
        if (br.status != Status::Pass)
            throw ValidationError("matrix from '" + spec + "' fails the braid relation");
        return {op, classify_symmetry(op, q0), spec};
    }
    return catalog(spec);
}

TensorOp resolve_gmatrix(const std::string& spec, int N) {
    if (spec.rfind("file:", 0) == 0 || is_json_path(spec)) {
        std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
        TensorOp g = load_tensorop(path);
        if (g.arity() != 1) throw ValidationError("g matrix file must have arity 1");
        return g;
    }
    std::string name = spec;
    std::string params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        params = spec.substr(colon + 1);
    }
    if (name == "id") return TensorOp::identity(N, 1);
    if (name == "diag") {
        std::vector<Rational> d;
        std::stringstream ss(params);
        std::string tok;
        while (std::getline(ss, tok, ',')) d.push_back(parse_rational(tok));
        if (static_cast<int>(d.size()) != N) throw ValidationError("diag g needs exactly N entries");
        TensorOp g(N, 1);
        for (int i = 0; i < N; ++i) g.at(i, i) = Scalar(d[static_cast<std::size_t>(i)]);
        return g;
    }
    throw ValidationError("unknown g specification '" + spec + "'");
}

RKind parse_kind(const std::string& s) {
    if (s == "rational") return RKind::Rational;
    if (s == "trig" || s == "trigonometric") return RKind::Trigonometric;
    throw ValidationError("unknown kind '" + s + "' (rational|trig)");
}

namespace {

// Braided Yang-Baxter identity RR_ov(ij) RR_ov(ik) RR_ov(jk) =
// RR_ov(jk) RR_ov(ik) RR_ov(ij) for RR = R F, with the two-sided
// transport (F A F style, no inverses; identical to conjugation when F
// is involutive). Ordered triples i<j<k always; all pairwise-distinct
// triples when F is involutive.
CheckResult braided_ybe_check(const Braiding& R, const Braiding& F, int n, const std::string& name) {
    PositionContext ctx(n, F.op);
    TensorOp rr = R.op * F.op;
    json details;
    details["sites"] = n;
    std::vector<std::array<int, 3>> triples;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || i == k || j == k) continue;
                if (!(i < j && j < k) && !ctx.involutive) continue;
                triples.push_back({i, j, k});
            }
    for (const auto& [i, j, k] : triples) {
        TensorOp rij = embed_ov_pair_twosided(rr, i, j, ctx);
        TensorOp rik = embed_ov_pair_twosided(rr, i, k, ctx);
        TensorOp rjk = embed_ov_pair_twosided(rr, j, k, ctx);
        TensorOp defect = rij * rik * rjk - rjk * rik * rij;
        if (!defect.is_zero()) {
            details["triple"] = {i, j, k};
            details["witness"] = entry_witness(defect);
            return CheckResult::fail(name, details);
        }
    }
    details["triples"] = triples.size();
    return CheckResult::pass(name, details);
}

// transport consistency R_ov(i,i+1) = R(i,i+1) for all adjacent pairs
CheckResult transport_consistency(const Braiding& R, const Braiding& F, int n, const std::string& name) {
    PositionContext ctx(n, F.op);
    for (int i = 1; i < n; ++i) {
        TensorOp defect = embed_ov_pair(R.op, i, i + 1, ctx) - embed_adjacent(R.op, i, n);
        if (!defect.is_zero()) {
            json details;
            details["slot"] = i;
            details["witness"] = entry_witness(defect);
            return CheckResult::fail(name, details);
        }
    }
    return CheckResult::pass(name);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
    return r.next();
}

// deterministic across platforms, unlike std::hash
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

CheckReport run_braiding_suite(const Braiding& B) {
    CheckReport rep;
    rep.suite = "braiding(" + B.name + ")";
    rep.checks.push_back(check_braid(B.op, B.name));
    SymmetryKind kind = classify_symmetry(B.op);
    json details;
    details["declared"] = symmetry_str(B.kind);
    details["classified"] = symmetry_str(kind);
    rep.checks.push_back(kind == B.kind ? CheckResult::pass("classify(" + B.name + ")", details)
                                        : CheckResult::fail("classify(" + B.name + ")", details));
    try {
        SkewInverse si = skew_inverse(B.op);
        json d2;
        d2["trace_weight"] = write_scalar(si.c.trace());
        rep.checks.push_back(CheckResult::pass("skew_invertible(" + B.name + ")", d2));
    } catch (const NotSkewInvertibleError& e) {
        rep.checks.push_back(CheckResult::fail("skew_invertible(" + B.name + ")", {{"error", e.what()}}));
    }
    return rep;
}

CheckReport run_compat_suite(const Braiding& R, const Braiding& F) {
    CheckReport rep;
    rep.suite = "compat(" + R.name + "," + F.name + ")";
    rep.checks.push_back(check_compatible(R, F));
    if (rep.checks.back().status == Status::Pass) {
        rep.checks.push_back(transport_consistency(R, F, 4, "transport(n=4)"));
        rep.checks.push_back(braided_ybe_check(R, F, 3, "braided_ybe(n=3)"));
        rep.checks.push_back(braided_ybe_check(R, F, 4, "braided_ybe(n=4)"));
    }
    return rep;
}

CheckReport run_baxter_suite(const Braiding& B, RKind kind, const SuiteOptions& opt) {
    CheckReport rep;
    rep.suite = "baxter(" + B.name + "," + rkind_str(kind) + ")";
    CurrentR rc = baxterize(B, kind, opt.q);
    Rng rng(opt.seed);
    std::vector<std::array<Rational, 3>> pts;
    while (static_cast<int>(pts.size()) < opt.points) {
        auto v = rng.distinct_rationals(3);
        pts.push_back({v[0], v[1], v[2]});
    }
    rep.checks.push_back(check_param_ybe(rc, pts, "param_ybe(" + B.name + ")"));

    // Negative control. For the trigonometric kind the mis-signed pole
    // term R + (q - q^-1) u I/(u - v) breaks the parameterized YBE. For
    // the rational kind no scalar re-coefficienting of the pole can break
    // it (R - cI/(u-v) is the same solution at rescaled parameters), so
    // the control corrupts the constant part instead.
    auto bad_eval = [&](const Rational& u, const Rational& v) {
        TensorOp id = TensorOp::identity(rc.base.N(), 2);
        if (kind == RKind::Trigonometric)
            return rc.base.op + (rc.qval - rc.qval.inverse()) * Scalar(u / (u - v)) * id;
        TensorOp broken = rc.base.op;
        broken.at(0, 1) += Scalar(1);
        return broken - id.scaled(Scalar(Rational(1) / (u - v)));
    };
    bool bad_failed = false;
    json bd;
    bd["control"] = kind == RKind::Trigonometric ? "mis-signed pole term" : "corrupted constant part";
    for (const auto& [u, v, w] : pts) {
        TensorOp defect = embed_adjacent(bad_eval(u, v), 1, 3) * embed_adjacent(bad_eval(u, w), 2, 3) *
                              embed_adjacent(bad_eval(v, w), 1, 3) -
                          embed_adjacent(bad_eval(v, w), 2, 3) * embed_adjacent(bad_eval(u, w), 1, 3) *
                              embed_adjacent(bad_eval(u, v), 2, 3);
        if (!defect.is_zero()) {
            bad_failed = true;
            bd["witness"] = entry_witness(defect);
            bd["point"] = {rational_str(u), rational_str(v), rational_str(w)};
            break;
        }
    }
    rep.checks.push_back(bad_failed ? CheckResult::pass("negative_control", bd)
                                    : CheckResult::fail("negative_control",
                                                        {{"error", "the corrupted variant passed the YBE"}}));
    return rep;
}

CheckReport run_rstructs_suite(const Braiding& R, const Braiding& F, const SuiteOptions& opt) {
    CheckReport rep;
    rep.suite = "rstructs(" + R.name + "," + F.name + ")";
    Rng rng(opt.seed);

    BraidedR r_rat = rational_braided_r(F);
    rep.checks.push_back(check_r_properties(r_rat, opt.points, rng, "rational_r_properties"));
    rep.checks.push_back(check_commutation(R, F, r_rat, 3, rng, "commutation(rational r)"));
    rep.checks.push_back(sklyanin_skew_check(r_rat, 5, rng, "sklyanin_skew(rational r)"));
    rep.checks.push_back(sklyanin_jacobi_check(r_rat, 3, 3, rng, "sklyanin_jacobi(rational r)"));

    if (R.kind == SymmetryKind::Hecke) {
        try {
            TensorOp rc = constant_r_from_expansion(R, F);
            BraidedR r_const{BRKind::Constant, F, rc};
            rep.checks.push_back(check_r_properties(r_const, 1, rng, "constant_r_properties"));
            TensorOp sd = schouten_defect(r_const, r_const, rat(2), rat(3), rat(5));
            rep.checks.push_back(zero_matrix_check("schouten([[r,r]])", sd));
            BraidedR r_trig = trigonometric_braided_r(F, rc);
            rep.checks.push_back(check_r_properties(r_trig, opt.points, rng, "trig_r_properties"));
            rep.checks.push_back(check_commutation(R, F, r_trig, 3, rng, "commutation(trig r)"));
            rep.checks.push_back(sklyanin_skew_check(r_trig, 5, rng, "sklyanin_skew(trig r)"));
            rep.checks.push_back(sklyanin_jacobi_check(r_trig, 3, 3, rng, "sklyanin_jacobi(trig r)"));
        } catch (const ValidationError& e) {
            rep.checks.push_back(CheckResult::fail("constant_r_from_expansion", {{"error", e.what()}}));
        }
    }
    return rep;
}

CheckReport run_kz_suite(RKind kind, const Braiding& F, const SuiteOptions& opt,
                         const std::optional<Braiding>& R_for_r) {
    CheckReport rep;
    rep.suite = std::string("kz(") + rkind_str(kind) + "," + F.name + ",n=" + std::to_string(opt.n) + ")";
    TensorOp g = resolve_gmatrix(opt.g_spec, F.N());
    GMatrix gm = validate_g(g, F);
    std::optional<TensorOp> rc;
    if (kind == RKind::Trigonometric) {
        if (!R_for_r) throw ValidationError("the trigonometric connection needs --R to build the constant r");
        rc = constant_r_from_expansion(*R_for_r, F);
    }
    KZConnection conn = build_connection(kind, opt.n, opt.kappa, gm, rc);
    Rng rng(opt.seed);
    json details;
    details["points"] = opt.points;
    details["kappa"] = rational_str(opt.kappa);
    int done = 0;
    while (done < opt.points) {
        auto u = rng.distinct_rationals(opt.n, 20);
        if (kind == RKind::Trigonometric) {
            bool zero = false;
            for (const auto& x : u)
                if (x == 0) zero = true;
            if (zero) continue;
        }
        for (int i = 1; i <= opt.n; ++i)
            for (int j = i + 1; j <= opt.n; ++j) {
                TensorOp defect = curvature_defect(conn, i, j, u);
                if (!defect.is_zero()) {
                    details["pair"] = {i, j};
                    details["witness"] = entry_witness(defect);
                    rep.checks.push_back(CheckResult::fail("curvature", details));
                    return rep;
                }
            }
        ++done;
    }
    rep.checks.push_back(CheckResult::pass("curvature", details));
    return rep;
}

CheckReport run_qkz_suite(const Braiding& R, const Braiding& F, RKind kind, const SuiteOptions& opt) {
    CheckReport rep;
    rep.suite = std::string("qkz(") + R.name + "," + F.name + "," + rkind_str(kind) +
                ",n=" + std::to_string(opt.n) + ")";
    TensorOp g = resolve_gmatrix(opt.g_spec, F.N());
    Braiding R_eval = (kind == RKind::Trigonometric && opt.q) ? R.evaluated(*opt.q) : R;
    GMatrix gm = validate_g(g, F, R_eval);
    QKZSystem sys = build_qkz(R, F, kind, opt.n, gm, opt.shift_p, opt.kappa, opt.q);
    Rng rng(opt.seed);
    json details;
    details["points"] = opt.points;
    details["p"] = rational_str(opt.shift_p);
    details["kappa"] = rational_str(opt.kappa);
    if (opt.q) details["q"] = rational_str(*opt.q);
    int done = 0;
    int attempts = 0;
    while (done < opt.points) {
        if (++attempts > 200 * opt.points) throw ValidationError("could not sample enough admissible points");
        auto u = rng.distinct_rationals(opt.n, 20);
        try {
            for (int i = 1; i <= opt.n; ++i)
                for (int j = i + 1; j <= opt.n; ++j) {
                    TensorOp defect = holonomy_defect(sys, i, j, u);
                    if (!defect.is_zero()) {
                        details["pair"] = {i, j};
                        details["witness"] = entry_witness(defect);
                        rep.checks.push_back(CheckResult::fail("holonomy", details));
                        return rep;
                    }
                }
        } catch (const PoleError&) {
            continue;
        } catch (const SingularError&) {
            continue;
        }
        ++done;
    }
    rep.checks.push_back(CheckResult::pass("holonomy", details));
    return rep;
}

namespace {

// Symbolic-q certification evaluates the relations at two independent
// seeded rational points; both solves must agree before VERIFIED.
std::vector<Rational> default_q_points(const SuiteOptions& opt, RKind kind) {
    if (kind != RKind::Trigonometric || opt.q) return {};
    Rng rng(mix_seed(opt.seed, 777));
    std::vector<Rational> pts;
    while (pts.size() < 2) {
        Rational q = rng.rational(9);
        if (q == 0 || q == 1 || q == -1) continue;
        if (!pts.empty() && pts[0] == q) continue;
        pts.push_back(q);
    }
    return pts;
}

} // namespace

CheckReport run_bethe_suite(const Braiding& R, const Braiding& F, RKind kind, const SuiteOptions& opt) {
    CheckReport rep;
    rep.suite = std::string("bethe(") + R.name + "," + F.name + ",e" + std::to_string(opt.k) + ",e" +
                std::to_string(opt.p) + ",K=" + std::to_string(opt.K) + ")";
    BetheContext ctx = BetheContext::make(R, F, kind, opt.K, opt.t0_identity, opt.q);
    BetheCertifyConfig cfg;
    cfg.k = opt.k;
    cfg.p = opt.p;
    cfg.bound_a = opt.bound_a;
    cfg.bound_b = opt.bound_b;
    cfg.level_bound = opt.level_bound;
    cfg.keep_certificates = opt.keep_certificates;
    cfg.q_points = default_q_points(opt, kind);
    CheckResult cr = bethe_commutator_certify(ctx, cfg);

    if (opt.replay && cr.status == Status::Pass && opt.keep_certificates) {
        // re-verify embedded certificates from their JSON form
        int krel = cfg.relations_K ? *cfg.relations_K : ctx.K + 1;
        RelationSet rels = defining_relations(ctx.R, ctx.F, ctx.kind, krel, ctx.t0_identity, ctx.qval);
        BetheElement ek = elementary_symmetric(ctx, cfg.k);
        BetheElement ep = (cfg.p == cfg.k) ? ek : elementary_symmetric(ctx, cfg.p);
        bool ok = true;
        for (auto& cj : cr.details["coefficients"]) {
            if (!cj.contains("certificates")) continue;
            int a = cj["a"].get<int>(), b = cj["b"].get<int>();
            NCPoly comm = ek.at(a) * ep.at(b) - ep.at(b) * ek.at(a);
            for (const auto& certj : cj["certificates"]) {
                MembershipCertificate cert = certificate_from_json(certj, ctx.R.N());
                if (!replay_certificate(cert, rels, comm)) ok = false;
            }
            cj["replayed"] = ok;
        }
        if (!ok) cr = CheckResult::fail(cr.name + "/replay", cr.details);
    }
    rep.checks.push_back(std::move(cr));
    return rep;
}

CheckReport run_newton_suite(const Braiding& R, const Braiding& F, RKind kind, const SuiteOptions& opt) {
    CheckReport rep;
    rep.suite = std::string("newton(") + R.name + "," + F.name + ",k=" + std::to_string(opt.k) +
                ",K=" + std::to_string(opt.K) + ")";
    BetheContext ctx = BetheContext::make(R, F, kind, opt.K, opt.t0_identity, opt.q);
    rep.checks.push_back(newton_defect_certify(ctx, opt.k, opt.level_bound, default_q_points(opt, kind)));
    return rep;
}

int worker_count() {
    const char* env = std::getenv("BRAIDCHECK_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    if (w < 1) return 1;
    if (w > 64) return 64;
    return w;
}

std::vector<CheckResult> run_parallel(std::vector<std::function<CheckResult()>> jobs) {
    std::vector<CheckResult> results(jobs.size());
    int workers = worker_count();
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            Stopwatch sw;
            results[i] = jobs[i]();
            results[i].wall_ms = sw.ms();
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            Stopwatch sw;
            results[i] = jobs[i]();
            results[i].wall_ms = sw.ms();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return results;
}

CheckReport run_full_suite(const SuiteOptions& opt) {
    // jobs produce sub-reports; workers may run them out of order but the
    // final report is assembled in submission order (determinism)
    std::vector<std::pair<std::string, std::function<CheckReport()>>> jobs;
    auto add = [&](const std::string& prefix, std::function<CheckReport()> fn) {
        jobs.emplace_back(prefix, std::move(fn));
    };

    const std::vector<std::string> names = {"flip:2", "superflip:1,1", "dj_hecke:2", "uq_sl11"};
    for (const auto& n : names)
        add("braiding", [n] { return run_braiding_suite(catalog(n)); });

    add("compat", [] { return run_compat_suite(catalog("uq_sl11"), catalog("flip:2")); });
    add("compat", [] { return run_compat_suite(catalog("dj_hecke:2"), catalog("dj_hecke:2")); });
    add("compat", [] { return run_compat_suite(catalog("uq_sl11"), catalog("superflip:1,1")); });

    for (const auto& n : names) {
        SuiteOptions o = opt;
        o.seed = mix_seed(opt.seed, fnv1a(n));
        o.points = std::min(opt.points, 10);
        add("baxter", [n, o] {
            Braiding b = catalog(n);
            RKind kind = b.kind == SymmetryKind::Involutive ? RKind::Rational : RKind::Trigonometric;
            return run_baxter_suite(b, kind, o);
        });
    }

    {
        SuiteOptions o = opt;
        o.seed = mix_seed(opt.seed, 101);
        o.points = std::min(opt.points, 5);
        add("rstructs", [o] { return run_rstructs_suite(catalog("uq_sl11"), catalog("superflip:1,1"), o); });
        SuiteOptions o2 = o;
        o2.seed = mix_seed(opt.seed, 102);
        add("rstructs", [o2] { return run_rstructs_suite(catalog("dj_hecke:2"), catalog("flip:2"), o2); });
    }

    add("hqa", [] {
        CheckReport r;
        r.suite = "hqa";
        r.checks.push_back(hqa_degeneration(catalog("dj_hecke:2")));
        r.checks.push_back(hqa_degeneration(catalog("uq_sl11")));
        return r;
    });

    {
        SuiteOptions o = opt;
        o.seed = mix_seed(opt.seed, 201);
        o.points = std::min(opt.points, 5);
        o.n = 3;
        o.kappa = rat(1, 2);
        o.g_spec = "diag:1,2";
        add("kz", [o] { return run_kz_suite(RKind::Rational, catalog("flip:2"), o); });
        SuiteOptions o2 = o;
        o2.seed = mix_seed(opt.seed, 202);
        add("kz", [o2] { return run_kz_suite(RKind::Rational, catalog("superflip:1,1"), o2); });
        SuiteOptions o3 = o;
        o3.seed = mix_seed(opt.seed, 203);
        o3.g_spec = "diag:1,-1";
        add("kz", [o3] {
            return run_kz_suite(RKind::Trigonometric, catalog("superflip:1,1"), o3, catalog("uq_sl11"));
        });
    }
    {
        SuiteOptions o = opt;
        o.seed = mix_seed(opt.seed, 301);
        o.points = std::min(opt.points, 5);
        o.n = 3;
        o.shift_p = rat(1);
        o.kappa = rat(1);
        o.g_spec = "id";
        add("qkz", [o] { return run_qkz_suite(catalog("flip:2"), catalog("flip:2"), RKind::Rational, o); });
        SuiteOptions o2 = o;
        o2.seed = mix_seed(opt.seed, 302);
        o2.shift_p = rat(2);
        o2.kappa = rat(3);
        o2.q = rat(5, 2);
        o2.g_spec = "diag:1,3";
        add("qkz",
            [o2] { return run_qkz_suite(catalog("dj_hecke:2"), catalog("flip:2"), RKind::Trigonometric, o2); });
    }
    {
        SuiteOptions o = opt;
        o.K = 2;
        o.k = 1;
        o.p = 1;
        o.bound_a = 2;
        o.bound_b = 2;
        o.keep_certificates = false;
        add("bethe", [o] { return run_bethe_suite(catalog("flip:2"), catalog("flip:2"), RKind::Rational, o); });
        SuiteOptions o2 = o;
        o2.q = rat(5, 2);
        o2.p = 2;
        add("bethe", [o2] {
            return run_bethe_suite(catalog("dj_hecke:2"), catalog("dj_hecke:2"), RKind::Trigonometric, o2);
        });
        SuiteOptions on = opt;
        on.K = 2;
        on.k = 2;
        add("newton", [on] { return run_newton_suite(catalog("flip:2"), catalog("flip:2"), RKind::Rational, on); });
        SuiteOptions on2 = on;
        on2.q = rat(5, 2);
        add("newton", [on2] {
            return run_newton_suite(catalog("dj_hecke:2"), catalog("dj_hecke:2"), RKind::Trigonometric, on2);
        });
    }

    std::vector<CheckReport> subs(jobs.size());
    std::vector<std::function<CheckResult()>> wrapped;
    wrapped.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i)
        wrapped.push_back([&subs, &jobs, i]() -> CheckResult {
            subs[i] = jobs[i].second();
            return CheckResult::pass(jobs[i].first);
        });
    run_parallel(std::move(wrapped));

    CheckReport rep;
    rep.suite = "all";
    for (std::size_t i = 0; i < jobs.size(); ++i)
        for (auto& c : subs[i].checks) {
            c.name = jobs[i].first + "/" + c.name;
            rep.checks.push_back(std::move(c));
        }
    return rep;
}

CheckReport run_from_config(const json& config) {
    static const std::vector<std::string> known = {
        "command", "R",     "F", "kind", "q",          "kappa",       "p_shift", "seed",
        "points",  "n",     "k", "p",    "K",          "bound",       "g",       "level_bound",
        "t0_identity",      "certificates", "replay"};
    if (!config.is_object()) throw ValidationError("config must be a JSON object");
    for (const auto& [key, value] : config.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ValidationError("unknown config key '" + key + "'");
    }
    auto get_str = [&](const char* key, const std::string& dflt) {
        return config.contains(key) ? config.at(key).get<std::string>() : dflt;
    };
    auto get_int = [&](const char* key, int dflt) {
        return config.contains(key) ? config.at(key).get<int>() : dflt;
    };
    std::string command = get_str("command", "");
    if (command.empty()) throw ValidationError("config needs a 'command'");

    SuiteOptions opt;
    if (config.contains("seed")) opt.seed = config.at("seed").get<std::uint64_t>();
    opt.points = get_int("points", opt.points);
    if (config.contains("q")) opt.q = parse_rational(config.at("q").get<std::string>());
    opt.kappa = parse_rational(get_str("kappa", "1"));
    opt.shift_p = parse_rational(get_str("p_shift", "1"));
    opt.n = get_int("n", opt.n);
    opt.k = get_int("k", opt.k);
    opt.p = get_int("p", opt.p);
    opt.K = get_int("K", opt.K);
    if (config.contains("bound")) {
        const auto& b = config.at("bound");
        if (!b.is_array() || b.size() != 2) throw ValidationError("'bound' must be [a, b]");
        opt.bound_a = b.at(0).get<int>();
        opt.bound_b = b.at(1).get<int>();
    }
    opt.g_spec = get_str("g", opt.g_spec);
    if (config.contains("level_bound")) opt.level_bound = config.at("level_bound").get<int>();
    if (config.contains("t0_identity")) opt.t0_identity = config.at("t0_identity").get<bool>();
    if (config.contains("certificates")) opt.keep_certificates = config.at("certificates").get<bool>();
    if (config.contains("replay")) opt.replay = config.at("replay").get<bool>();

    std::string r_spec = get_str("R", "flip:2");
    std::string f_spec = get_str("F", "flip:2");
    RKind kind = parse_kind(get_str("kind", "rational"));
    auto braidings = [&] {
        Braiding R = resolve_braiding(r_spec, opt.q);
        Braiding F = (f_spec == "same") ? R : resolve_braiding(f_spec, opt.q);
        return std::make_pair(R, F);
    };

    if (command == "braiding") return run_braiding_suite(resolve_braiding(r_spec, opt.q));
    if (command == "compat") {
        auto [R, F] = braidings();
        return run_compat_suite(R, F);
    }
    if (command == "baxter") return run_baxter_suite(resolve_braiding(r_spec, opt.q), kind, opt);
    if (command == "rstructs") {
        auto [R, F] = braidings();
        return run_rstructs_suite(R, F, opt);
    }
    if (command == "kz") {
        auto [R, F] = braidings();
        std::optional<Braiding> r_source;
        if (kind == RKind::Trigonometric) r_source = R;
        return run_kz_suite(kind, F, opt, r_source);
    }
    if (command == "qkz") {
        auto [R, F] = braidings();
        return run_qkz_suite(R, F, kind, opt);
    }
    if (command == "bethe") {
        auto [R, F] = braidings();
        return run_bethe_suite(R, F, kind, opt);
    }
    if (command == "newton") {
        auto [R, F] = braidings();
        return run_newton_suite(R, F, kind, opt);
    }
    if (command == "all") return run_full_suite(opt);
    throw ValidationError("unknown command '" + command + "'");
}

std::string emit_report(const CheckReport& report, const std::string& format) {
    if (format == "json") return report.to_json().dump(2) + "\n";
    if (format == "text") return report.to_text();
    throw ValidationError("unknown report format '" + format + "' (json|text)");
}

} // namespace braidcheck
