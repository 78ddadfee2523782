#include "braidcheck/kz.hpp"

namespace braidcheck {

GMatrix validate_g(const TensorOp& g, const Braiding& F, const std::optional<Braiding>& R) {
    if (g.arity() != 1 || g.N() != F.N()) throw ShapeError("g must be an N x N matrix over V");
    if (F.kind != SymmetryKind::Involutive) throw ValidationError("KZ connections need an involutive F");
    TensorOp g1 = embed_adjacent(g, 1, 2);
    const TensorOp& f = F.op;
    TensorOp d = f * g1 * f * g1 - g1 * f * g1 * f;
    if (!d.is_zero()) {
        auto w = entry_witness(d);
        throw ValidationError("g fails F g1 F g1 = g1 F g1 F at entry (" + w["row"].dump() + "," +
                              w["col"].dump() + ")");
    }
    GMatrix gm{g, F, false};
    if (R) {
        TensorOp gov2 = f * g1 * f; // F involutive
        TensorOp x = g1 * gov2;
        TensorOp d2 = R->op * x - x * R->op;
        if (!d2.is_zero()) {
            auto w = entry_witness(d2);
            throw ValidationError("g fails [R, g_ov1 g_ov2] = 0 at entry (" + w["row"].dump() + "," +
                                  w["col"].dump() + ")");
        }
        gm.qkz_ready = true;
    }
    return gm;
}

KZConnection build_connection(RKind kind, int n, const Rational& kappa, const GMatrix& g,
                              const std::optional<TensorOp>& r_const) {
    if (n < 2) throw ValidationError("a KZ connection needs n >= 2 sites");
    KZConnection c;
    c.kind = kind;
    c.n = n;
    c.kappa = kappa;
    c.g = g.g;
    c.F = g.F;
    if (kind == RKind::Trigonometric) {
        if (!r_const) throw ValidationError("the trigonometric connection needs a constant braided r-matrix");
        c.r_const = *r_const;
    }
    return c;
}

namespace {

void check_point(const std::vector<Rational>& u, int n) {
    if (static_cast<int>(u.size()) != n) throw ShapeError("point dimension mismatch");
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (u[a] == u[b]) throw PoleError("coincident coordinates in a KZ evaluation point");
}

} // namespace

TensorOp KZConnection::eval(int i, const std::vector<Rational>& u) const {
    check_point(u, n);
    if (i < 1 || i > n) throw ShapeError("connection index out of range");
    PositionContext ctx(n, F.op);
    TensorOp m = embed_ov_single(g, i, ctx);
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        Rational d = u[static_cast<std::size_t>(i - 1)] - u[static_cast<std::size_t>(k - 1)];
        TensorOp fik = embed_ov_pair(F.op, i, k, ctx);
        if (kind == RKind::Rational) {
            m = m + fik.scaled(Scalar(kappa / d));
        } else {
            TensorOp rik = embed_ov_pair(r_const, i, k, ctx);
            m = m + fik.scaled(Scalar(kappa * u[static_cast<std::size_t>(i - 1)] / d)) -
                rik.scaled(Scalar(kappa / 2));
        }
    }
    return m;
}

TensorOp KZConnection::derivative_term(int i, int j, const std::vector<Rational>& u) const {
    check_point(u, n);
    if (i == j) throw ShapeError("derivative term needs i != j");
    PositionContext ctx(n, F.op);
    TensorOp fji = embed_ov_pair(F.op, j, i, ctx);
    Rational d = u[static_cast<std::size_t>(j - 1)] - u[static_cast<std::size_t>(i - 1)];
    if (kind == RKind::Rational) {
        // d_i of F_{ov ji}/(u_j - u_i)
        return fji.scaled(Scalar(kappa / (d * d)));
    }
    // u_i d_i of F_{ov ji} u_j/(u_j - u_i)
    Rational ui = u[static_cast<std::size_t>(i - 1)], uj = u[static_cast<std::size_t>(j - 1)];
    return fji.scaled(Scalar(kappa * ui * uj / (d * d)));
}

TensorOp curvature_defect(const KZConnection& conn, int i, int j, const std::vector<Rational>& u) {
    if (i == j) throw ShapeError("curvature needs i != j");
    TensorOp mi = conn.eval(i, u);
    TensorOp mj = conn.eval(j, u);
    TensorOp di_mj = conn.derivative_term(i, j, u);
    TensorOp dj_mi = conn.derivative_term(j, i, u);
    return di_mj - dj_mi - (mi * mj - mj * mi);
}

QKZSystem build_qkz(const Braiding& R, const Braiding& F, RKind kind, int n, const GMatrix& g,
                    const Rational& p, const Rational& kappa, const std::optional<Rational>& q0) {
    if (!g.qkz_ready)
        throw ValidationError("g must be validated with the R-matrix condition for difference systems");
    return build_qkz_unchecked(R, F, kind, n, g.g, p, kappa, q0);
}

QKZSystem build_qkz_unchecked(const Braiding& R, const Braiding& F, RKind kind, int n, const TensorOp& g,
                              const Rational& p, const Rational& kappa, const std::optional<Rational>& q0) {
    if (n < 2) throw ValidationError("a difference system needs n >= 2 sites");
    if (p == 0 || (kind == RKind::Trigonometric && p == 1))
        throw ValidationError("the shift step must be nontrivial");
    if (kappa == 0) throw ValidationError("kappa must be nonzero");
    QKZSystem sys;
    sys.rr = normalized_R(R, F, kind, q0);
    sys.n = n;
    sys.g = g;
    sys.p = p;
    sys.kappa = kappa;
    return sys;
}

std::vector<Rational> QKZSystem::shifted(const std::vector<Rational>& u, int i) const {
    std::vector<Rational> v = u;
    auto& ui = v[static_cast<std::size_t>(i - 1)];
    if (rr.kind == RKind::Rational) {
        ui += p;
    } else {
        ui *= p;
    }
    return v;
}

TensorOp QKZSystem::eval(int i, const std::vector<Rational>& u) const {
    check_point(u, n);
    if (i < 1 || i > n) throw ShapeError("system index out of range");
    PositionContext ctx(n, rr.F.op);
    Rational xi = shifted(u, i)[static_cast<std::size_t>(i - 1)];
    TensorOp acc = embed_ov_single(g, i, ctx);
    for (int j = n; j > i; --j)
        acc = acc * embed_ov_pair(rr.eval(u[static_cast<std::size_t>(i - 1)], u[static_cast<std::size_t>(j - 1)]),
                                  i, j, ctx);
    for (int j = 1; j < i; ++j)
        acc = embed_ov_pair(rr.eval(xi, u[static_cast<std::size_t>(j - 1)]), i, j, ctx) * acc;
    return acc.scaled(Scalar(kappa));
}

TensorOp holonomy_defect(const QKZSystem& sys, int i, int j, const std::vector<Rational>& u) {
    if (i == j) throw ShapeError("holonomy needs i != j");
    std::vector<Rational> ui = sys.shifted(u, i);
    std::vector<Rational> uj = sys.shifted(u, j);
    return sys.eval(j, ui) * sys.eval(i, u) - sys.eval(i, uj) * sys.eval(j, u);
}

} // namespace braidcheck
