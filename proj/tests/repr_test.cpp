#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqp/repr.hpp"

using namespace eqp;

TEST_CASE("principal series satisfies the dual-algebra relations symbolically") {
    const CycField& F = CycField::get(5);
    LRep L = rep_L(F);
    ParamScalar lp = ParamScalar::param(F, Param::LambdaPlus);
    ParamScalar lm = ParamScalar::param(F, Param::LambdaMinus);
    CHECK(L.p_plus * L.kappa == L.kappa * L.p_plus * ParamScalar::from_cyc(Cyc::q(F, -1)));
    CHECK(L.p_minus * L.kappa == L.kappa * L.p_minus * ParamScalar::from_cyc(Cyc::q(F, 1)));
    CHECK(L.p_plus * L.p_minus == L.p_minus * L.p_plus);
    CHECK(L.kappa.pow(5) == RepMatrix::identity(F, 5));
    CHECK(L.p_plus.pow(5) == RepMatrix::identity(F, 5) * lp.pow(5));
    CHECK(L.p_minus.pow(5) == RepMatrix::identity(F, 5) * lm.pow(5));
    CHECK(L.P_plus == RepMatrix::identity(F, 5) * lp.pow(5));
    // evaluation is an algebra map
    UElement x = UElement::p_plus(F) * UElement::kappa(F, 2);
    UElement y = UElement::p_minus(F) * UElement::p_plus(F);
    CHECK(rep_eval(L, x * y) == rep_eval(L, x) * rep_eval(L, y));
}

TEST_CASE("one-dimensional weight modules corepresent as delta powers") {
    const CycField& F = CycField::get(3);
    for (int m = 0; m < 3; ++m) {
        EMatrix Tm = universal_T_rep(F, rep_L_weight(F, m));
        REQUIRE(Tm.dim() == 1);
        CHECK(Tm.at(0, 0) == EElement(AElement::delta(F, m)));
    }
}

TEST_CASE("counit slice of the matrix is the identity") {
    const CycField& F = CycField::get(3);
    const EMatrix& D = dmatrix(F);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(D.at(r, c).counit() ==
                  (r == c ? ParamScalar::one(F) : ParamScalar::zero(F)));
}

TEST_CASE("closed forms agree with the direct evaluation") {
    const CycField& F = CycField::get(3);
    const EMatrix& D = dmatrix(F);
    for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) CHECK(dmatrix_closed(F, m, n) == D.at(m, n));
        CHECK(dmatrix_special(F, m) == D.at(m, 0));
    }
}

TEST_CASE("structural checks of the corepresentation matrix") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    CHECK(addition_theorem_check(F).pass);
    CHECK(unitarity_sums_check(F).pass);
    CHECK(recurrence_check(F, pr).pass);
    CHECK(plane_wave_check(F, pr).pass);
}

TEST_CASE("first-column orthogonality produces a two-delta distribution") {
    const CycField& F = CycField::get(3);
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) {
            OrthReport r = orthogonality_discrete(F, n, m);
            CHECK(r.pass);
            if ((n + m) % 3 != 0) {
                CHECK(r.value.is_zero());
            } else {
                REQUIRE(r.value.parts().size() == 1);
                const auto& [sym, coeff] = *r.value.parts().begin();
                CHECK(sym.args.size() == 2);
                CHECK(sym.two_pi_power() == 2);
                (void)coeff;
                // the coincidence coefficient reduces to a power of the
                // parameters, independent of n
                ParamScalar lam = ParamScalar::param(F, Param::LambdaPlus) *
                                  ParamScalar::param(F, Param::LambdaMinus);
                CHECK(r.lambda_power == lam.pow(2));
            }
        }
}

TEST_CASE("truncated q-exponentials and q-Bessel sums stop below the order") {
    const CycField& F = CycField::get(3);
    EElement x = EElement(AElement::eta_plus(F));
    EElement qe = cutoff_qexp(x, +1);
    // 1 + eta+ + q/[2]! eta+^2 and nothing beyond
    EElement want = EElement::unit(F) + x + x.pow(2) * (Cyc::q(F, 1) * q_fact_inv(F, 2));
    CHECK(qe == want);
    EElement arg = EElement(AElement::eta_plus(F) * AElement::eta_minus(F));
    EElement jb = qbessel_cut(1, arg);
    // k ranges over 0..p-1-m only: 1/[1]! - q/([1]![2]!) x
    EElement wantj = EElement::unit(F) -
                     arg * (Cyc::q(F, 1) * q_fact_inv(F, 2) * q_fact_inv(F, 1));
    CHECK(jb == wantj);
}
