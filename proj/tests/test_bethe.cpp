#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidcheck/bethe.hpp"
#include "oracles.hpp"

using namespace braidcheck;
using namespace braidcheck::testing;

TEST_CASE("skew-symmetrizer tower") {
    SUBCASE("k = 2 reproduces (qI - R)/(q + q^-1) symbolically") {
        for (std::string n : {"dj_hecke:2", "uq_sl11"}) {
            Braiding b = catalog(n);
            Scalar q = Scalar::q();
            TensorOp expect = (q * TensorOp::identity(2, 2) - b.op).scaled((q + q.inverse()).inverse());
            CHECK(skew_symmetrizer_op(b, 2) == expect);
        }
    }
    SUBCASE("involutive limit is the classical antisymmetrizer") {
        TensorOp a2 = skew_symmetrizer_op(catalog("flip:2"), 2);
        CHECK(a2 == (TensorOp::identity(2, 2) - TensorOp::flip(2)).scaled(Scalar(rat(1, 2))));
        CHECK(a2.trace() == Scalar(1)); // rank 1 for N = 2
        CHECK(skew_symmetrizer_op(catalog("flip:2"), 3).is_zero());
    }
    SUBCASE("idempotency up to k = 4") {
        for (std::string n : {"superflip:1,1", "uq_sl11"}) {
            Braiding b = catalog(n);
            for (int k = 2; k <= 4; ++k) {
                TensorOp a = skew_symmetrizer_op(b, k);
                CHECK(a * a == a);
                CHECK(!a.is_zero());
            }
        }
    }
    SUBCASE("tower absorption A^(k+1) A^(k) = A^(k+1)") {
        Braiding b = catalog("uq_sl11");
        for (int k = 2; k <= 3; ++k) {
            TensorOp big = skew_symmetrizer_op(b, k + 1);
            TensorOp small = embed_adjacent(skew_symmetrizer_op(b, k), 1, k + 1);
            CHECK(big * small == big);
        }
    }
    SUBCASE("vanishing above the symmetric rank") {
        CHECK(skew_symmetrizer_op(catalog("dj_hecke:2"), 3).is_zero());
        CHECK(skew_symmetrizer_op(catalog("dj_hecke:2"), 4).is_zero());
        CHECK(!skew_symmetrizer_op(catalog("dj_hecke:3"), 3).is_zero());
        CHECK(skew_symmetrizer_op(catalog("dj_hecke:3"), 4).is_zero());
    }
    SUBCASE("q-number zeros are rejected") {
        // at q = -1 the Hecke condition itself is outside the admissible range
        CHECK_THROWS_AS(skew_symmetrizer_op(catalog("dj_hecke:2"), 2, rat(-1)), ValidationError);
    }
}

TEST_CASE("elementary symmetric polynomials") {
    Braiding P = catalog("flip:2");
    BetheContext ctx = BetheContext::make(P, P, RKind::Rational, 3);
    SUBCASE("e_0 = p_0 = 1") {
        CHECK(elementary_symmetric(ctx, 0).at(0) == NCPoly(Scalar(1)));
        CHECK(power_sum(ctx, 0).at(0) == NCPoly(Scalar(1)));
    }
    SUBCASE("e_1 is the ordinary trace series for F = P") {
        BetheElement e1 = elementary_symmetric(ctx, 1);
        for (int m = 0; m <= 3; ++m) {
            NCPoly expect;
            for (int i = 1; i <= 2; ++i) expect += NCPoly::generator(make_gen(i, i, m, 2));
            CHECK(e1.at(m) == expect);
        }
    }
    SUBCASE("e_k vanishes above the symmetric rank") {
        Braiding dj = catalog("dj_hecke:2");
        BetheContext ctxq = BetheContext::make(dj, dj, RKind::Trigonometric, 2, false, rat(5, 2));
        BetheElement e3 = elementary_symmetric(ctxq, 3);
        for (int m = 0; m <= 2; ++m) CHECK(e3.at(m).is_zero());
    }
}

TEST_CASE("e_2 of the plain pair is the quantum determinant modulo relations") {
    // classical cross-check: for R = F = P and N = 2,
    //   e_2(u) = t_1^1(u) t_2^2(u-1) - t_2^1(u) t_1^2(u-1)
    // holds in the algebra (the free-polynomial difference is a sum of
    // half-commutators, certified below and evaluated to zero by the
    // independent oracle)
    BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 3);
    BetheElement e2 = elementary_symmetric(ctx, 2);
    RelationSet rels = defining_relations(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 4);
    RttEvalOracle oracle = make_rtt_eval_oracle(2, 3, 606);
    auto s = [&](int i, int j) {
        NCSeries out;
        for (int m = 0; m <= 3; ++m) out.emplace(m, NCPoly::generator(make_gen(i, j, m, 2)));
        return out;
    };
    NCSeries qdet = series_add(
        series_mul(s(1, 1), series_shift_arg(s(2, 2), rat(1), 3), 3),
        series_scale(series_mul(s(2, 1), series_shift_arg(s(1, 2), rat(1), 3), 3), Scalar(-1)));
    for (int m = 0; m <= 3; ++m) {
        NCPoly diff = e2.at(m) - (qdet.count(m) ? qdet.at(m) : NCPoly());
        CHECK(oracle.eval(diff).is_zero());
        CHECK(ideal_membership(diff, rels, m + 1).verified);
    }
}

TEST_CASE("power sums and the reduced form") {
    Braiding dj = catalog("dj_hecke:2");
    BetheContext ctxq = BetheContext::make(dj, dj, RKind::Trigonometric, 2, false, rat(5, 2));
    BetheElement general = power_sum(ctxq, 2);
    BetheElement reduced = power_sum_reduced(ctxq, 2);
    CHECK(general.coeff == reduced.coeff);
    // reduced form requires F = R
    BetheContext mixed = BetheContext::make(dj, catalog("flip:2"), RKind::Trigonometric, 2, false, rat(5, 2));
    CHECK_THROWS_AS(power_sum_reduced(mixed, 2), ValidationError);
}

TEST_CASE("Newton identity defects") {
    SUBCASE("k = 1 vanishes identically as free polynomials") {
        BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 3);
        CHECK(newton_defect_certify(ctx, 1).status == Status::Pass);
        Braiding dj = catalog("dj_hecke:2");
        BetheContext ctxq = BetheContext::make(dj, dj, RKind::Trigonometric, 2, false, rat(7, 3));
        CHECK(newton_defect_certify(ctxq, 1).status == Status::Pass);
    }
    SUBCASE("k = 2 and k = 3 defects are ideal members") {
        BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 3);
        CHECK(newton_defect_certify(ctx, 2).status == Status::Pass);
        CHECK(newton_defect_certify(ctx, 3).status == Status::Pass);
        Braiding dj = catalog("dj_hecke:2");
        BetheContext ctxq = BetheContext::make(dj, dj, RKind::Trigonometric, 2, false, rat(5, 2));
        CHECK(newton_defect_certify(ctxq, 2).status == Status::Pass);
        CHECK(newton_defect_certify(ctxq, 3).status == Status::Pass);
    }
}

TEST_CASE("Bethe commutativity certification") {
    SUBCASE("plain rational, both T[0] conventions") {
        for (bool t0 : {false, true}) {
            BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 2,
                                                  t0);
            BetheCertifyConfig cfg;
            cfg.k = 1;
            cfg.p = 1;
            cfg.bound_a = 2;
            cfg.bound_b = 2;
            CheckResult cr = bethe_commutator_certify(ctx, cfg);
            CHECK(cr.status == Status::Pass);
        }
    }
    SUBCASE("coefficient (0,0) of [e1,e1] is the zero polynomial") {
        BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 2);
        BetheElement e1 = elementary_symmetric(ctx, 1);
        CHECK((e1.at(0) * e1.at(0) - e1.at(0) * e1.at(0)).is_zero());
    }
    SUBCASE("oracle cross-check of commutator coefficients") {
        BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 3);
        BetheElement e1 = elementary_symmetric(ctx, 1);
        BetheElement e2 = elementary_symmetric(ctx, 2);
        RttEvalOracle oracle = make_rtt_eval_oracle(2, 3, 31337);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 2; ++b) {
                NCPoly comm = e1.at(a) * e2.at(b) - e2.at(b) * e1.at(a);
                CHECK(oracle.eval(comm).is_zero());
            }
    }
    SUBCASE("bi-degree bound must respect the truncation") {
        BetheContext ctx = BetheContext::make(catalog("flip:2"), catalog("flip:2"), RKind::Rational, 1);
        BetheCertifyConfig cfg;
        cfg.bound_a = 5;
        CHECK_THROWS_AS(bethe_commutator_certify(ctx, cfg), ValidationError);
    }
}
