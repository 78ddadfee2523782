#include "braidcheck/tensor_op.hpp"

#include <string>

namespace braidcheck {

namespace {

int pow_int(int b, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

TensorOp::TensorOp(int N, int arity) : N_(N), arity_(arity) {
    if (N < 1 || arity < 0) throw ShapeError("bad tensor operator shape");
    dim_ = pow_int(N, arity);
    e_.assign(static_cast<std::size_t>(dim_) * dim_, Scalar());
}

TensorOp TensorOp::identity(int N, int arity) {
    TensorOp t(N, arity);
    for (int i = 0; i < t.dim_; ++i) t.at(i, i) = Scalar(1);
    return t;
}

TensorOp TensorOp::flip(int N) {
    TensorOp p(N, 2);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) p.at(j * N + i, i * N + j) = Scalar(1);
    return p;
}

bool TensorOp::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

TensorOp TensorOp::operator+(const TensorOp& o) const {
    if (!same_shape(o)) throw ShapeError("tensor operator shape mismatch in +");
    TensorOp r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) r.e_[i] += o.e_[i];
    return r;
}

TensorOp TensorOp::operator-(const TensorOp& o) const {
    if (!same_shape(o)) throw ShapeError("tensor operator shape mismatch in -");
    TensorOp r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) r.e_[i] -= o.e_[i];
    return r;
}

TensorOp TensorOp::operator*(const TensorOp& o) const {
    if (!same_shape(o)) throw ShapeError("tensor operator shape mismatch in *");
    TensorOp r(N_, arity_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

TensorOp TensorOp::operator-() const {
    TensorOp r = *this;
    for (auto& s : r.e_)
        if (!s.is_zero()) s = -s;
    return r;
}

TensorOp TensorOp::scaled(const Scalar& s) const {
    TensorOp r(N_, arity_);
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) r.e_[i] = e_[i] * s;
    return r;
}

bool TensorOp::operator==(const TensorOp& o) const {
    return N_ == o.N_ && arity_ == o.arity_ && e_ == o.e_;
}

TensorOp TensorOp::kron(const TensorOp& o) const {
    if (N_ != o.N_ && arity_ != 0 && o.arity_ != 0)
        throw ShapeError("kron requires equal local dimension");
    int N = arity_ == 0 ? o.N_ : N_;
    TensorOp r(N, arity_ + o.arity_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < o.dim_; ++k)
                for (int l = 0; l < o.dim_; ++l) {
                    const Scalar& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    r.at(i * o.dim_ + k, j * o.dim_ + l) = a * b;
                }
        }
    return r;
}

TensorOp TensorOp::inverse() const {
    TensorOp a = *this;
    TensorOp inv = identity(N_, arity_);
    for (int col = 0; col < dim_; ++col) {
        int piv = -1;
        for (int r = col; r < dim_; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularError("singular tensor operator");
        if (piv != col)
            for (int c = 0; c < dim_; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        Scalar d = a.at(col, col).inverse();
        for (int c = 0; c < dim_; ++c) {
            if (!a.at(col, c).is_zero()) a.at(col, c) *= d;
            if (!inv.at(col, c).is_zero()) inv.at(col, c) *= d;
        }
        for (int r = 0; r < dim_; ++r) {
            if (r == col) continue;
            Scalar f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < dim_; ++c) {
                if (!a.at(col, c).is_zero()) a.at(r, c) -= f * a.at(col, c);
                if (!inv.at(col, c).is_zero()) inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

Scalar TensorOp::trace() const {
    Scalar t;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

TensorOp TensorOp::partial_trace(const std::vector<int>& slots) const {
    if (arity_ == 0) throw ShapeError("partial trace of an empty tensor operator");
    std::vector<bool> traced(static_cast<std::size_t>(arity_) + 1, false);
    int nt = 0;
    for (int s : slots) {
        if (s < 1 || s > arity_) throw ShapeError("partial-trace slot out of range");
        if (!traced[static_cast<std::size_t>(s)]) {
            traced[static_cast<std::size_t>(s)] = true;
            ++nt;
        }
    }
    int m = arity_ - nt;
    TensorOp r(N_, m);
    int kept_dim = r.dim();
    int traced_dim = pow_int(N_, nt);
    // digit positions (most significant first)
    auto compose = [&](int kept, int diag) {
        int idx = 0;
        int kd = kept_dim, td = traced_dim;
        for (int s = 1; s <= arity_; ++s) {
            int digit;
            if (traced[static_cast<std::size_t>(s)]) {
                td /= N_;
                digit = (diag / td) % N_;
            } else {
                kd /= N_;
                digit = (kept / kd) % N_;
            }
            idx = idx * N_ + digit;
        }
        return idx;
    };
    for (int rk = 0; rk < kept_dim; ++rk)
        for (int ck = 0; ck < kept_dim; ++ck) {
            Scalar acc;
            for (int t = 0; t < traced_dim; ++t) {
                const Scalar& v = at(compose(rk, t), compose(ck, t));
                if (!v.is_zero()) acc += v;
            }
            r.at(rk, ck) = acc;
        }
    return r;
}

TensorOp TensorOp::evaluated(const Rational& q0) const {
    TensorOp r(N_, arity_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j).evaluated(q0);
    return r;
}

TensorOp TensorOp::derivative() const {
    TensorOp r(N_, arity_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j).derivative();
    return r;
}

std::optional<std::tuple<int, int, Scalar>> TensorOp::first_nonzero() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) return std::make_tuple(i, j, at(i, j));
    return std::nullopt;
}

TensorOp embed_adjacent(const TensorOp& A, int pos, int n) {
    if (pos < 1 || pos + A.arity() - 1 > n) throw ShapeError("embedding position out of range");
    TensorOp r = TensorOp::identity(A.N(), pos - 1);
    r = r.kron(A);
    int tail = n - (pos - 1) - A.arity();
    if (tail > 0) r = r.kron(TensorOp::identity(A.N(), tail));
    return r;
}

TensorOp embed_plain(const TensorOp& A, int pos, int n) {
    if (A.arity() != 1) throw ShapeError("embed_plain expects an arity-1 operator");
    return embed_adjacent(A, pos, n);
}

TensorOp embed_plain_pair(const TensorOp& A, int k, int l, int n) {
    if (A.arity() != 2) throw ShapeError("embed_plain_pair expects an arity-2 operator");
    if (k == l) throw ShapeError("coincident slots in two-slot embedding");
    PositionContext ctx(n, TensorOp::flip(A.N()));
    return embed_ov_pair(A, k, l, ctx);
}

PositionContext::PositionContext(int n_slots, const TensorOp& F_braiding)
    : N(F_braiding.N()), n(n_slots), F(F_braiding) {
    if (F.arity() != 2) throw ShapeError("transport braiding must have arity 2");
    TensorOp sq = F * F;
    involutive = (sq == TensorOp::identity(N, 2));
    F_inv = involutive ? F : F.inverse();
}

TensorOp embed_ov_single(const TensorOp& A, int k, const PositionContext& ctx) {
    if (A.arity() != 1 || A.N() != ctx.N) throw ShapeError("embed_ov_single expects an arity-1 operator over V");
    if (k < 1 || k > ctx.n) throw ShapeError("overlined position out of range");
    TensorOp M = embed_adjacent(A, 1, ctx.n);
    for (int j = 2; j <= k; ++j) {
        TensorOp Fj = embed_adjacent(ctx.F, j - 1, ctx.n);
        TensorOp Fj_inv = embed_adjacent(ctx.F_inv, j - 1, ctx.n);
        M = Fj * M * Fj_inv;
    }
    return M;
}

TensorOp embed_ov_pair(const TensorOp& A, int k, int l, const PositionContext& ctx) {
    if (A.arity() != 2 || A.N() != ctx.N) throw ShapeError("embed_ov_pair expects an arity-2 operator over V");
    if (k == l) throw ShapeError("coincident overlined slots");
    if (k < 1 || l < 1 || k > ctx.n || l > ctx.n) throw ShapeError("overlined position out of range");
    if (k > l) {
        if (!ctx.involutive)
            throw ValidationError("descending two-slot transport requires an involutive braiding");
        return embed_ov_pair(ctx.F * A * ctx.F, l, k, ctx);
    }
    TensorOp M = embed_adjacent(A, 1, ctx.n);
    // move second leg 2 -> l, then first leg 1 -> k
    for (int j = 3; j <= l; ++j) {
        TensorOp Fj = embed_adjacent(ctx.F, j - 1, ctx.n);
        TensorOp Fj_inv = embed_adjacent(ctx.F_inv, j - 1, ctx.n);
        M = Fj * M * Fj_inv;
    }
    for (int j = 2; j <= k; ++j) {
        TensorOp Fj = embed_adjacent(ctx.F, j - 1, ctx.n);
        TensorOp Fj_inv = embed_adjacent(ctx.F_inv, j - 1, ctx.n);
        M = Fj * M * Fj_inv;
    }
    return M;
}

TensorOp embed_ov_pair_twosided(const TensorOp& A, int k, int l, const PositionContext& ctx) {
    if (A.arity() != 2 || A.N() != ctx.N)
        throw ShapeError("embed_ov_pair_twosided expects an arity-2 operator over V");
    if (k == l) throw ShapeError("coincident overlined slots");
    if (k < 1 || l < 1 || k > ctx.n || l > ctx.n) throw ShapeError("overlined position out of range");
    if (k > l) return embed_ov_pair_twosided(ctx.F * A * ctx.F, l, k, ctx);
    TensorOp M = embed_adjacent(A, 1, ctx.n);
    for (int j = 3; j <= l; ++j) {
        TensorOp Fj = embed_adjacent(ctx.F, j - 1, ctx.n);
        M = Fj * M * Fj;
    }
    for (int j = 2; j <= k; ++j) {
        TensorOp Fj = embed_adjacent(ctx.F, j - 1, ctx.n);
        M = Fj * M * Fj;
    }
    return M;
}

} // namespace braidcheck
