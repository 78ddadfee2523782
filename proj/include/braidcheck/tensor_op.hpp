#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "braidcheck/scalar.hpp"

namespace braidcheck {

/*
 * Square operator on V^{otimes n}, dim V = N, with exact Scalar entries.
 * Entries are stored densely (row-major); all kernels skip structural
 * zeros, which is what matters at the dimensions this library targets.
 *
 * Slot indices are 1-based. Row/column multi-indices are big-endian:
 * slot 1 is the most significant digit.
 */
class TensorOp {
public:
    TensorOp() : N_(1), arity_(0), dim_(1), e_(1) {}
    TensorOp(int N, int arity);

    static TensorOp identity(int N, int arity);
    // Usual flip P on V (x) V.
    static TensorOp flip(int N);

    int N() const { return N_; }
    int arity() const { return arity_; }
    int dim() const { return dim_; }

    const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }

    bool is_zero() const;
    bool same_shape(const TensorOp& o) const { return N_ == o.N_ && arity_ == o.arity_; }

    TensorOp operator+(const TensorOp& o) const;
    TensorOp operator-(const TensorOp& o) const;
    TensorOp operator*(const TensorOp& o) const;
    TensorOp operator-() const;
    TensorOp scaled(const Scalar& s) const;
    friend TensorOp operator*(const Scalar& s, const TensorOp& A) { return A.scaled(s); }

    bool operator==(const TensorOp& o) const;
    bool operator!=(const TensorOp& o) const { return !(*this == o); }

    TensorOp kron(const TensorOp& o) const;
    TensorOp inverse() const; // throws SingularError
    Scalar trace() const;

    // Exact partial trace over the named slots (1-based).
    TensorOp partial_trace(const std::vector<int>& slots) const;

    // Entrywise evaluation q -> q0.
    TensorOp evaluated(const Rational& q0) const;
    // Entrywise exact d/dq.
    TensorOp derivative() const;

    // First nonzero entry (row, col, value), scanning row-major; used for
    // failure witnesses.
    std::optional<std::tuple<int, int, Scalar>> first_nonzero() const;

private:
    int N_;
    int arity_;
    int dim_; // N^arity
    std::vector<Scalar> e_;
};

// A (x) I placed with its first slot at `pos` inside V^{otimes n};
// A may have any arity m with pos + m - 1 <= n.
TensorOp embed_adjacent(const TensorOp& A, int pos, int n);

// Plain (flip-transported) embeddings.
TensorOp embed_plain(const TensorOp& A, int pos, int n);            // arity-1 A
TensorOp embed_plain_pair(const TensorOp& A, int k, int l, int n);  // arity-2 A, k != l

/*
 * Transport context for overlined positions: a braiding F moves matrices
 * to higher tensor slots in place of the usual flip.
 */
struct PositionContext {
    int N;
    int n;
    TensorOp F;
    TensorOp F_inv;
    bool involutive;

    PositionContext(int n_slots, const TensorOp& F_braiding);
};

// A_{ov k} = F_{k-1,k} ... F_{12} A_1 F_12^{-1} ... F_{k-1,k}^{-1}.
TensorOp embed_ov_single(const TensorOp& A, int k, const PositionContext& ctx);

// Two-slot transport; k > l requires involutive F (A_{ov kl} = (F A F)_{ov lk}).
TensorOp embed_ov_pair(const TensorOp& A, int k, int l, const PositionContext& ctx);

// Two-sided transport: the chains are applied on both sides without
// inverting (A_{ov 21} = F A F style). Identical to embed_ov_pair for
// involutive F; this is the transport under which the braided
// Yang-Baxter identity closes for Hecke transports as well.
TensorOp embed_ov_pair_twosided(const TensorOp& A, int k, int l, const PositionContext& ctx);

} // namespace braidcheck
