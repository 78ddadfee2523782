#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcheck/currents.hpp"

namespace braidcheck {

/*
 * Free associative algebra on the generators t_i^j[m] (matrix position
 * i,j in 1..N, series level m in 0..K) with Scalar coefficients.
 * Generators are packed into integer ids; words are id sequences.
 */
using GenId = std::uint32_t;

inline GenId make_gen(int i, int j, int m, int N) {
    return static_cast<GenId>((m * N + (i - 1)) * N + (j - 1));
}
struct GenInfo {
    int i, j, m;
};
inline GenInfo gen_info(GenId g, int N) {
    GenInfo gi;
    gi.j = static_cast<int>(g % N) + 1;
    g /= static_cast<GenId>(N);
    gi.i = static_cast<int>(g % N) + 1;
    gi.m = static_cast<int>(g / N);
    return gi;
}
inline int gen_level(GenId g, int N) { return static_cast<int>(g) / (N * N); }

using Word = std::vector<GenId>;

inline int word_level(const Word& w, int N) {
    int l = 0;
    for (GenId g : w) l += gen_level(g, N);
    return l;
}

std::string word_str(const Word& w, int N);

// Column/row ordering for the membership solver: degree, then level,
// then lexicographic.
struct GradedLexLess {
    int N;
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        int la = word_level(a, N), lb = word_level(b, N);
        if (la != lb) return la < lb;
        return a < b;
    }
};

class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(const Scalar& c) {
        if (!c.is_zero()) t_[Word{}] = c;
    }
    static NCPoly generator(GenId g, const Scalar& c = Scalar(1)) {
        NCPoly p;
        if (!c.is_zero()) p.t_[Word{g}] = c;
        return p;
    }
    static NCPoly monomial(Word w, const Scalar& c) {
        NCPoly p;
        if (!c.is_zero()) p.t_[std::move(w)] = c;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<Word, Scalar>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }

    int max_degree() const;
    int max_level(int N) const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b); // free product
    NCPoly operator-() const;
    NCPoly scaled(const Scalar& s) const;

    // entrywise q -> q0 on coefficients
    NCPoly evaluated(const Rational& q0) const;

    bool operator==(const NCPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    std::string str(int N) const;

private:
    std::map<Word, Scalar> t_;
};

/*
 * One defining relation of a generalized Yangian, tagged with the
 * (u^{-a}, v^{-b}) bi-degree it was read off from. Bi-degree -1 marks
 * the coefficients of positive powers of u or v in the pole-cleared
 * equation (the constant RTT-type relations). `origin` distinguishes
 * series relations from the optional T[0] = I normalization.
 */
struct Relation {
    NCPoly poly;
    int a = 0;
    int b = 0;
    std::string origin = "series";
};

struct RelationSet {
    int N = 0;
    int K = 0;
    RKind kind = RKind::Rational;
    bool t0_identity = false;
    std::vector<Relation> rels;
};

/*
 * Expand R(u,v) T_{ov1}(u) T_{ov2}(v) = T_{ov1}(v) T_{ov2}(u) R(u,v)
 * multiplied through by (u - v), with T(u) = sum_{m<=K} T[m] u^{-m},
 * and emit every bi-degree whose coefficient is fully determined at
 * truncation K. With t0_identity the degree-1 relations t_i^j[0] -
 * delta_ij are adjoined.
 */
RelationSet defining_relations(const Braiding& R, const Braiding& F, RKind kind, int K,
                               bool t0_identity = false, const Scalar& qval = Scalar::q());

/*
 * Ideal membership by exact sparse linear algebra over Q: p is sought
 * in the span of { w_l . rel . w_r } with top degree bounded by that of
 * p and total level bounded by level_bound. Symbolic-q inputs are
 * solved at each q point independently; every solve must succeed.
 * The outcome is a semidecision: VERIFIED comes with replayable
 * certificates, INCONCLUSIVE means "not provable from these products",
 * never "false".
 */
struct CertTerm {
    Word left;
    std::size_t rel_index;
    Word right;
    Rational coeff;
};

struct MembershipCertificate {
    std::optional<Rational> q0; // evaluation point (absent for plain-rational runs)
    std::vector<CertTerm> terms;
};

struct MembershipOutcome {
    bool verified = false;
    std::vector<MembershipCertificate> certs;
    json info = json::object();
};

MembershipOutcome ideal_membership(const NCPoly& p, const RelationSet& rels, int level_bound,
                                   const std::vector<Rational>& q_points = {});

// Recompute the certificate combination and compare with p (evaluated at
// the certificate's q point when one is present). Exact.
bool replay_certificate(const MembershipCertificate& cert, const RelationSet& rels, const NCPoly& p);

json certificate_to_json(const MembershipCertificate& cert, int N);
MembershipCertificate certificate_from_json(const json& j, int N);

} // namespace braidcheck
