#include "braidcheck/freealg.hpp"

#include <algorithm>
#include <set>

namespace braidcheck {

std::string word_str(const Word& w, int N) {
    if (w.empty()) return "1";
    std::string s;
    for (GenId g : w) {
        GenInfo gi = gen_info(g, N);
        if (!s.empty()) s += ".";
        s += "t" + std::to_string(gi.i) + "^" + std::to_string(gi.j) + "[" + std::to_string(gi.m) + "]";
    }
    return s;
}

int NCPoly::max_degree() const {
    int d = 0;
    for (const auto& [w, c] : t_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
}

int NCPoly::max_level(int N) const {
    int l = 0;
    for (const auto& [w, c] : t_) l = std::max(l, word_level(w, N));
    return l;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) {
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) {
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto it = r.t_.find(w);
            if (it == r.t_.end()) {
                r.t_.emplace(std::move(w), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

NCPoly NCPoly::scaled(const Scalar& s) const {
    NCPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, c * s);
    return r;
}

NCPoly NCPoly::evaluated(const Rational& q0) const {
    NCPoly r;
    for (const auto& [w, c] : t_) {
        Rational v = c.evaluate(q0);
        if (v != 0) r.t_.emplace(w, Scalar(v));
    }
    return r;
}

std::string NCPoly::str(int N) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.debug_string() + ")*" + word_str(w, N);
    }
    return s;
}

namespace {

// N^2 x N^2 matrix with NCPoly entries; used to expand the defining
// relations before reading off bi-degree coefficients.
struct NCMat {
    int dim = 0;
    std::vector<NCPoly> e;

    NCMat() = default;
    explicit NCMat(int d) : dim(d), e(static_cast<std::size_t>(d) * d) {}
    NCPoly& at(int r, int c) { return e[static_cast<std::size_t>(r) * dim + c]; }
    const NCPoly& at(int r, int c) const { return e[static_cast<std::size_t>(r) * dim + c]; }
};

NCMat mul(const TensorOp& a, const NCMat& b) {
    NCMat r(b.dim);
    for (int i = 0; i < b.dim; ++i)
        for (int k = 0; k < b.dim; ++k) {
            const Scalar& s = a.at(i, k);
            if (s.is_zero()) continue;
            for (int j = 0; j < b.dim; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += b.at(k, j).scaled(s);
            }
        }
    return r;
}

NCMat mul(const NCMat& a, const TensorOp& b) {
    NCMat r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.dim; ++j) {
                const Scalar& s = b.at(k, j);
                if (s.is_zero()) continue;
                r.at(i, j) += a.at(i, k).scaled(s);
            }
        }
    return r;
}

NCMat mul(const NCMat& a, const NCMat& b) {
    NCMat r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.dim; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

} // namespace

RelationSet defining_relations(const Braiding& R, const Braiding& F, RKind kind, int K, bool t0_identity,
                               const Scalar& qval) {
    if (K < 0) throw ValidationError("truncation order K must be nonnegative");
    if (R.N() != F.N()) throw ShapeError("R and F must share the local dimension");
    if (!is_compatible(R.op, F.op)) throw ValidationError("the pair (R, F) is not compatible");
    if (kind == RKind::Rational && R.kind != SymmetryKind::Involutive)
        throw ValidationError("rational relations need an involutive symmetry");
    if (kind == RKind::Trigonometric && R.kind != SymmetryKind::Hecke)
        throw ValidationError("trigonometric relations need a Hecke symmetry");

    const int N = R.N();
    const int dim = N * N;
    TensorOp Finv = F.op * F.op == TensorOp::identity(N, 2) ? F.op : F.op.inverse();

    // level-m slices of T_{ov1} and T_{ov2}
    std::vector<NCMat> A(static_cast<std::size_t>(K) + 1, NCMat(dim));
    std::vector<NCMat> B(static_cast<std::size_t>(K) + 1, NCMat(dim));
    for (int m = 0; m <= K; ++m) {
        NCMat t1(dim);
        for (int i1 = 0; i1 < N; ++i1)
            for (int j1 = 0; j1 < N; ++j1)
                for (int s = 0; s < N; ++s)
                    t1.at(i1 * N + s, j1 * N + s) = NCPoly::generator(make_gen(i1 + 1, j1 + 1, m, N));
        A[static_cast<std::size_t>(m)] = t1;
        B[static_cast<std::size_t>(m)] = mul(mul(F.op, t1), Finv);
    }

    Scalar lam = qval - qval.inverse();

    RelationSet out;
    out.N = N;
    out.K = K;
    out.kind = kind;
    out.t0_identity = t0_identity;

    auto term_ok = [&](int m1, int m2) { return m1 >= 0 && m2 >= 0; };
    auto term_known = [&](int m1, int m2) { return m1 <= K && m2 <= K; };

    for (int a = -1; a <= K; ++a)
        for (int b = -1; b <= K; ++b) {
            if (a == -1 && b == -1) continue;
            struct Term {
                bool left_R;
                bool right_R;
                int m1, m2;
                int sign; // +1/-1
                bool lam_factor;
            };
            std::vector<Term> terms;
            // (u - v) R T1(u) T2(v)
            terms.push_back({true, false, a + 1, b, +1, false});
            terms.push_back({true, false, a, b + 1, -1, false});
            // - c(u) T1(u) T2(v)
            if (kind == RKind::Rational) {
                terms.push_back({false, false, a, b, -1, false});
            } else {
                terms.push_back({false, false, a + 1, b, -1, true});
            }
            // - (u - v) T1(v) T2(u) R
            terms.push_back({false, true, b, a + 1, -1, false});
            terms.push_back({false, true, b + 1, a, +1, false});
            // + T1(v) T2(u) c(u)
            if (kind == RKind::Rational) {
                terms.push_back({false, false, b, a, +1, false});
            } else {
                terms.push_back({false, false, b, a + 1, +1, true});
            }
            bool complete = true;
            bool any_needed = false;
            for (const auto& t : terms) {
                if (!term_ok(t.m1, t.m2)) continue;
                any_needed = true;
                if (!term_known(t.m1, t.m2)) {
                    complete = false;
                    break;
                }
            }
            if (!complete || !any_needed) continue;

            NCMat rel(dim);
            for (const auto& t : terms) {
                if (!term_ok(t.m1, t.m2)) continue;
                NCMat prod = mul(A[static_cast<std::size_t>(t.m1)], B[static_cast<std::size_t>(t.m2)]);
                if (t.left_R) prod = mul(R.op, prod);
                if (t.right_R) prod = mul(prod, R.op);
                Scalar s = Scalar(t.sign);
                if (t.lam_factor) s = s * lam;
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c)
                        if (!prod.at(r, c).is_zero()) rel.at(r, c) += prod.at(r, c).scaled(s);
            }
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    if (!rel.at(r, c).is_zero()) out.rels.push_back({rel.at(r, c), a, b, "series"});
        }

    if (t0_identity) {
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                NCPoly p = NCPoly::generator(make_gen(i, j, 0, N));
                if (i == j) p -= NCPoly(Scalar(1));
                out.rels.push_back({p, 0, 0, "t0_unit"});
            }
    }
    return out;
}

namespace {

// One product column w_l . rel . w_r of the membership matrix.
struct ColumnMeta {
    Word left;
    std::size_t rel_index;
    Word right;
};

// Enumerate words over the generator alphabet with a degree target and a
// level budget, in deterministic (graded-lex friendly) order.
void enumerate_words(int N, int K, int degree, int level_budget, Word& scratch, std::vector<Word>& out) {
    if (degree == 0) {
        out.push_back(scratch);
        return;
    }
    int gens = N * N * (K + 1);
    for (GenId g = 0; g < static_cast<GenId>(gens); ++g) {
        int lvl = gen_level(g, N);
        if (lvl > level_budget) continue;
        scratch.push_back(g);
        enumerate_words(N, K, degree - 1, level_budget - lvl, scratch, out);
        scratch.pop_back();
    }
}

struct SparseRow {
    std::map<int, Rational> a; // column -> coefficient
    Rational rhs = 0;
};

} // namespace

MembershipOutcome ideal_membership(const NCPoly& p, const RelationSet& rels, int level_bound,
                                   const std::vector<Rational>& q_points) {
    MembershipOutcome out;
    if (p.is_zero()) {
        out.verified = true;
        out.certs.push_back({std::nullopt, {}});
        out.info["trivial"] = "zero polynomial";
        return out;
    }
    const int N = rels.N;
    const int D = p.max_degree();

    // decide whether a symbolic-q evaluation loop is needed
    bool symbolic = false;
    for (const auto& [w, c] : p.terms())
        if (!c.is_rational()) symbolic = true;
    for (const auto& r : rels.rels) {
        if (symbolic) break;
        for (const auto& [w, c] : r.poly.terms())
            if (!c.is_rational()) {
                symbolic = true;
                break;
            }
    }
    std::vector<std::optional<Rational>> points;
    if (symbolic) {
        if (q_points.empty())
            throw ValidationError("symbolic relations need at least one q evaluation point");
        for (const auto& q : q_points) points.emplace_back(q);
    } else {
        points.emplace_back(std::nullopt);
    }

    // column metadata is q-independent: build once
    std::vector<ColumnMeta> columns;
    for (std::size_t ri = 0; ri < rels.rels.size(); ++ri) {
        const NCPoly& rp = rels.rels[ri].poly;
        int dr = rp.max_degree();
        int lr = rp.max_level(N);
        if (dr > D || dr == 0 || lr > level_bound) continue;
        for (int dl = 0; dl + dr <= D; ++dl) {
            int drr = D - dr - dl;
            std::vector<Word> lefts, rights;
            Word scratch;
            enumerate_words(N, rels.K, dl, level_bound - lr, scratch, lefts);
            for (const Word& wl : lefts) {
                int lw = word_level(wl, N);
                if (lw + lr > level_bound) continue;
                rights.clear();
                enumerate_words(N, rels.K, drr, level_bound - lr - lw, scratch, rights);
                for (const Word& wr : rights) columns.push_back({wl, ri, wr});
            }
        }
    }
    out.info["columns"] = columns.size();

    for (const auto& q0 : points) {
        auto eval_poly = [&](const NCPoly& poly) { return q0 ? poly.evaluated(*q0) : poly; };

        // assemble sparse equations: one row per word
        std::map<Word, int, GradedLexLess> row_of{GradedLexLess{N}};
        auto row_id = [&](const Word& w) {
            auto it = row_of.find(w);
            if (it != row_of.end()) return it->second;
            int id = static_cast<int>(row_of.size());
            row_of.emplace(w, id);
            return id;
        };
        std::vector<std::map<int, Rational>> col_entries(columns.size());
        for (std::size_t ci = 0; ci < columns.size(); ++ci) {
            const auto& cm = columns[ci];
            NCPoly prod = NCPoly::monomial(cm.left, Scalar(1)) * eval_poly(rels.rels[cm.rel_index].poly) *
                          NCPoly::monomial(cm.right, Scalar(1));
            for (const auto& [w, c] : prod.terms()) col_entries[ci][row_id(w)] = c.as_rational();
        }
        NCPoly pe = eval_poly(p);
        std::map<int, Rational> target;
        for (const auto& [w, c] : pe.terms()) target[row_id(w)] = c.as_rational();

        const int nrows = static_cast<int>(row_of.size());
        std::vector<SparseRow> rows(static_cast<std::size_t>(nrows));
        for (std::size_t ci = 0; ci < columns.size(); ++ci)
            for (const auto& [r, v] : col_entries[ci]) rows[static_cast<std::size_t>(r)].a[static_cast<int>(ci)] = v;
        for (const auto& [r, v] : target) rows[static_cast<std::size_t>(r)].rhs = v;
        col_entries.clear();

        // Gaussian elimination in equation space; sparser equations are
        // pivoted first to limit coefficient growth.
        std::vector<int> order(static_cast<std::size_t>(nrows));
        for (int i = 0; i < nrows; ++i) order[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return rows[static_cast<std::size_t>(x)].a.size() < rows[static_cast<std::size_t>(y)].a.size(); });

        std::map<int, SparseRow> pivot; // pivot column -> normalized equation
        bool consistent = true;
        for (int idx : order) {
            SparseRow r = rows[static_cast<std::size_t>(idx)];
            while (!r.a.empty()) {
                int c = r.a.begin()->first;
                auto pit = pivot.find(c);
                if (pit == pivot.end()) break;
                Rational f = r.a.begin()->second;
                const SparseRow& pr = pit->second;
                for (const auto& [pc, pv] : pr.a) {
                    auto it = r.a.find(pc);
                    if (it == r.a.end()) {
                        r.a.emplace(pc, -f * pv);
                    } else {
                        it->second -= f * pv;
                        if (it->second == 0) r.a.erase(it);
                    }
                }
                r.rhs -= f * pr.rhs;
            }
            if (r.a.empty()) {
                if (r.rhs != 0) {
                    consistent = false;
                    break;
                }
                continue;
            }
            int c = r.a.begin()->first;
            Rational lead = r.a.begin()->second;
            for (auto& [cc, vv] : r.a) vv /= lead;
            r.rhs /= lead;
            pivot.emplace(c, std::move(r));
        }
        if (!consistent) {
            out.verified = false;
            out.info["status"] = "no solution at the sampled q";
            if (q0) out.info["q"] = rational_str(*q0);
            return out;
        }

        // Back substitution with free variables set to zero. Every pivot
        // row's smallest column is its pivot, so walking pivots in
        // descending column order resolves dependencies first.
        std::map<int, Rational> x;
        for (auto it = pivot.rbegin(); it != pivot.rend(); ++it) {
            const SparseRow& pr = it->second;
            Rational v = pr.rhs;
            for (const auto& [c, coef] : pr.a) {
                if (c == it->first) continue;
                auto xit = x.find(c);
                if (xit != x.end()) v -= coef * xit->second;
            }
            if (v != 0) x[it->first] = v;
        }

        MembershipCertificate cert;
        cert.q0 = q0;
        for (const auto& [c, v] : x) {
            const auto& cm = columns[static_cast<std::size_t>(c)];
            cert.terms.push_back({cm.left, cm.rel_index, cm.right, v});
        }
        if (!replay_certificate(cert, rels, p)) {
            out.verified = false;
            out.info["status"] = "internal: certificate replay failed";
            return out;
        }
        out.certs.push_back(std::move(cert));
    }
    out.verified = true;
    return out;
}

bool replay_certificate(const MembershipCertificate& cert, const RelationSet& rels, const NCPoly& p) {
    NCPoly acc;
    for (const auto& t : cert.terms) {
        if (t.rel_index >= rels.rels.size()) return false;
        NCPoly rp = rels.rels[t.rel_index].poly;
        if (cert.q0) rp = rp.evaluated(*cert.q0);
        acc += (NCPoly::monomial(t.left, Scalar(t.coeff)) * rp) * NCPoly::monomial(t.right, Scalar(1));
    }
    NCPoly target = cert.q0 ? p.evaluated(*cert.q0) : p;
    return acc == target;
}

json certificate_to_json(const MembershipCertificate& cert, int N) {
    json j;
    j["q"] = cert.q0 ? json(rational_str(*cert.q0)) : json(nullptr);
    auto terms = json::array();
    for (const auto& t : cert.terms) {
        json tj;
        tj["left"] = word_str(t.left, N);
        tj["rel"] = t.rel_index;
        tj["right"] = word_str(t.right, N);
        tj["coeff"] = rational_str(t.coeff);
        terms.push_back(tj);
    }
    j["terms"] = terms;
    return j;
}

namespace {

Word word_from_str(const std::string& s, int N) {
    Word w;
    if (s == "1") return w;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '.') ++i;
        if (i >= s.size() || s[i] != 't') throw ValidationError("bad word literal '" + s + "'");
        ++i;
        auto read_int = [&](char stop) {
            std::size_t start = i;
            while (i < s.size() && s[i] != stop) ++i;
            if (i >= s.size()) throw ValidationError("bad word literal '" + s + "'");
            int v = std::stoi(s.substr(start, i - start));
            ++i;
            return v;
        };
        int gi = read_int('^');
        std::size_t start = i;
        while (i < s.size() && s[i] != '[') ++i;
        if (i >= s.size()) throw ValidationError("bad word literal '" + s + "'");
        int gj = std::stoi(s.substr(start, i - start));
        ++i;
        int gm = read_int(']');
        w.push_back(make_gen(gi, gj, gm, N));
    }
    return w;
}

} // namespace

MembershipCertificate certificate_from_json(const json& j, int N) {
    MembershipCertificate cert;
    if (!j.at("q").is_null()) cert.q0 = parse_rational(j.at("q").get<std::string>());
    for (const auto& tj : j.at("terms")) {
        CertTerm t;
        t.left = word_from_str(tj.at("left").get<std::string>(), N);
        t.rel_index = tj.at("rel").get<std::size_t>();
        t.right = word_from_str(tj.at("right").get<std::string>(), N);
        t.coeff = parse_rational(tj.at("coeff").get<std::string>());
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

} // namespace braidcheck
