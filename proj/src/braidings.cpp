#include "braidcheck/braidings.hpp"

#include <sstream>

namespace braidcheck {

namespace {

std::vector<long> parse_params(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stol(tok));
        } catch (...) {
            throw ValidationError("bad catalog parameter '" + tok + "'");
        }
    }
    return out;
}

TensorOp superflip_op(int m, int n) {
    int N = m + n;
    TensorOp p(N, 2);
    auto parity = [&](int i) { return i >= m ? 1 : 0; };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int sign = (parity(i) && parity(j)) ? -1 : 1;
            p.at(j * N + i, i * N + j) = Scalar(sign);
        }
    return p;
}

// Drinfeld-Jimbo Hecke symmetry for U_q(sl(N)) in braiding form:
//   e_i (x) e_i -> q e_i (x) e_i
//   e_i (x) e_j -> e_j (x) e_i                      (i < j)
//   e_i (x) e_j -> e_j (x) e_i + (q - q^-1) e_i (x) e_j   (i > j)
TensorOp dj_hecke_op(int N) {
    TensorOp r(N, 2);
    Scalar q = Scalar::q();
    Scalar lam = Scalar::q() - Scalar::q_pow(-1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int col = i * N + j;
            if (i == j) {
                r.at(col, col) = q;
            } else {
                r.at(j * N + i, col) = Scalar(1);
                if (i > j) r.at(col, col) = lam;
            }
        }
    return r;
}

TensorOp uq_sl11_op() {
    TensorOp r(2, 2);
    Scalar q = Scalar::q();
    r.at(0, 0) = q;
    r.at(1, 1) = q - Scalar::q_pow(-1);
    r.at(1, 2) = Scalar(1);
    r.at(2, 1) = Scalar(1);
    r.at(3, 3) = -Scalar::q_pow(-1);
    return r;
}

} // namespace

Braiding catalog(const std::string& spec) {
    std::string name = spec;
    std::string params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        params = spec.substr(colon + 1);
    }
    if (name == "flip") {
        auto p = parse_params(params.empty() ? "2" : params);
        if (p.size() != 1 || p[0] < 1) throw ValidationError("flip needs one positive dimension");
        return {TensorOp::flip(static_cast<int>(p[0])), SymmetryKind::Involutive, spec};
    }
    if (name == "superflip") {
        auto p = parse_params(params);
        if (p.size() != 2 || p[0] < 0 || p[1] < 0 || p[0] + p[1] < 1)
            throw ValidationError("superflip needs parameters m,n");
        return {superflip_op(static_cast<int>(p[0]), static_cast<int>(p[1])), SymmetryKind::Involutive, spec};
    }
    if (name == "dj_hecke") {
        auto p = parse_params(params.empty() ? "2" : params);
        if (p.size() != 1 || p[0] < 2) throw ValidationError("dj_hecke needs one dimension >= 2");
        return {dj_hecke_op(static_cast<int>(p[0])), SymmetryKind::Hecke, spec};
    }
    if (name == "uq_sl11") {
        if (!params.empty()) throw ValidationError("uq_sl11 takes no parameters");
        return {uq_sl11_op(), SymmetryKind::Hecke, spec};
    }
    throw ValidationError("unknown catalog braiding '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"flip:N", "superflip:m,n", "dj_hecke:N", "uq_sl11"};
}

CheckResult check_braid(const TensorOp& B, const std::string& name) {
    if (B.arity() != 2) throw ShapeError("braid check expects an arity-2 operator");
    int n = 3;
    TensorOp b12 = embed_adjacent(B, 1, n);
    TensorOp b23 = embed_adjacent(B, 2, n);
    TensorOp defect = b12 * b23 * b12 - b23 * b12 * b23;
    return zero_matrix_check("braid(" + name + ")", defect);
}

SymmetryKind classify_symmetry(const TensorOp& B, const std::optional<Rational>& q0) {
    TensorOp id = TensorOp::identity(B.N(), 2);
    if (B * B == id) return SymmetryKind::Involutive;
    Scalar q;
    if (q0) {
        if (*q0 == 0 || *q0 == 1 || *q0 == -1)
            throw ValidationError("Hecke test needs q not in {0, 1, -1}");
        q = Scalar(*q0);
    } else {
        q = Scalar::q();
    }
    TensorOp hecke = (B - q * id) * (B + q.inverse() * id);
    if (hecke.is_zero()) return SymmetryKind::Hecke;
    return SymmetryKind::Generic;
}

bool is_compatible(const TensorOp& R, const TensorOp& F) {
    int n = 3;
    TensorOp r12 = embed_adjacent(R, 1, n), r23 = embed_adjacent(R, 2, n);
    TensorOp f12 = embed_adjacent(F, 1, n), f23 = embed_adjacent(F, 2, n);
    return (r12 * f23 * f12 == f23 * f12 * r23) && (r23 * f12 * f23 == f12 * f23 * r12);
}

CheckResult check_compatible(const Braiding& R, const Braiding& F) {
    if (R.N() != F.N()) throw ShapeError("compatibility check needs equal local dimensions");
    int n = 3;
    TensorOp r12 = embed_adjacent(R.op, 1, n), r23 = embed_adjacent(R.op, 2, n);
    TensorOp f12 = embed_adjacent(F.op, 1, n), f23 = embed_adjacent(F.op, 2, n);

    std::string name = "compatible(" + R.name + "," + F.name + ")";
    json details;
    TensorOp d1 = r12 * f23 * f12 - f23 * f12 * r23;
    TensorOp d2 = r23 * f12 * f23 - f12 * f23 * r12;
    // transport consequence: moving R to slots (2,3) with F equals the
    // plain placement
    PositionContext ctx(n, F.op);
    TensorOp d3 = embed_ov_pair(R.op, 2, 3, ctx) - r23;

    bool swapped = (f12 * r23 * r12 == r23 * r12 * f23) && (f23 * r12 * r23 == r12 * r23 * f12);
    details["swapped_pair_compatible"] = swapped;

    if (!d1.is_zero()) {
        details["witness"] = entry_witness(d1);
        details["relation"] = "R12 F23 F12 = F23 F12 R23";
        return CheckResult::fail(name, details);
    }
    if (!d2.is_zero()) {
        details["witness"] = entry_witness(d2);
        details["relation"] = "R23 F12 F23 = F12 F23 R12";
        return CheckResult::fail(name, details);
    }
    if (!d3.is_zero()) {
        details["witness"] = entry_witness(d3);
        details["relation"] = "R_ov23 = R23";
        return CheckResult::fail(name, details);
    }
    return CheckResult::pass(name, details);
}

SkewInverse skew_inverse(const TensorOp& F) {
    if (F.arity() != 2) throw ShapeError("skew inverse expects an arity-2 operator");
    const int N = F.N();
    const int dim = N * N;
    const int unknowns = dim * dim;
    // Equations: sum_{s,t} F^{a s}_{c t} Psi^{t b}_{s d} = delta_{a d} delta_{b c}.
    auto psi_index = [&](int t, int b, int s, int d) { return ((t * N + b) * N + s) * N + d; };
    std::vector<Scalar> mat(static_cast<std::size_t>(unknowns) * (unknowns + 1));
    auto m_at = [&](int r, int c) -> Scalar& { return mat[static_cast<std::size_t>(r) * (unknowns + 1) + c]; };
    int row = 0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d, ++row) {
                    for (int s = 0; s < N; ++s)
                        for (int t = 0; t < N; ++t) {
                            const Scalar& coef = F.at(a * N + s, c * N + t);
                            if (coef.is_zero()) continue;
                            m_at(row, psi_index(t, b, s, d)) += coef;
                        }
                    if (a == d && b == c) m_at(row, unknowns) = Scalar(1);
                }
    // exact Gaussian elimination
    std::vector<int> pivot_col(unknowns, -1);
    int rank = 0;
    for (int col = 0; col < unknowns && rank < unknowns; ++col) {
        int piv = -1;
        for (int r = rank; r < unknowns; ++r)
            if (!m_at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = col; c <= unknowns; ++c) std::swap(m_at(piv, c), m_at(rank, c));
        Scalar inv = m_at(rank, col).inverse();
        for (int c = col; c <= unknowns; ++c)
            if (!m_at(rank, c).is_zero()) m_at(rank, c) *= inv;
        for (int r = 0; r < unknowns; ++r) {
            if (r == rank) continue;
            Scalar f = m_at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c <= unknowns; ++c)
                if (!m_at(rank, c).is_zero()) m_at(r, c) -= f * m_at(rank, c);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < unknowns; ++r)
        if (!m_at(r, unknowns).is_zero())
            throw NotSkewInvertibleError("the defining system for the skew inverse is inconsistent");
    if (rank < unknowns)
        throw NotSkewInvertibleError("the defining system for the skew inverse is underdetermined");

    TensorOp psi(N, 2);
    for (int r = 0; r < unknowns; ++r) {
        int u = pivot_col[r];
        int d = u % N, s = (u / N) % N, b = (u / (N * N)) % N, t = u / (N * N * N);
        psi.at(t * N + b, s * N + d) = m_at(r, unknowns);
    }
    // verify both defining identities before handing the result out;
    // after tracing slot 2 the surviving slots (1,3) carry the plain flip
    TensorOp p13 = TensorOp::flip(N);
    TensorOp lhs1 = (embed_adjacent(F, 1, 3) * embed_adjacent(psi, 2, 3)).partial_trace({2});
    TensorOp lhs2 = (embed_adjacent(psi, 1, 3) * embed_adjacent(F, 2, 3)).partial_trace({2});
    if (!(lhs1 == p13) || !(lhs2 == p13))
        throw NotSkewInvertibleError("solved skew inverse fails a defining identity");

    SkewInverse si;
    si.psi = psi;
    si.c = psi.partial_trace({2});
    return si;
}

TensorOp f_trace(const TensorOp& X, int k, const SkewInverse& si) {
    if (k < 1 || k > X.arity()) throw ShapeError("F-trace slot count out of range");
    TensorOp Y = X;
    for (int j = 1; j <= k; ++j) Y = embed_plain(si.c, j, X.arity()) * Y;
    std::vector<int> slots;
    for (int j = 1; j <= k; ++j) slots.push_back(j);
    return Y.partial_trace(slots);
}

} // namespace braidcheck
