#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqp/algebra_ext.hpp"
#include "eqp/algebra_u.hpp"

using namespace eqp;

TEST_CASE("reduced algebra straightening and truncation") {
    for (int p : {3, 5}) {
        const CycField& F = CycField::get(p);
        AElement ep = AElement::eta_plus(F), em = AElement::eta_minus(F);
        AElement dl = AElement::delta(F);
        Cyc q2 = Cyc::q(F, 2);
        CHECK(em * ep == ep * em * q2);
        CHECK(ep * dl == dl * ep * q2);
        CHECK(em * dl == dl * em * q2);
        CHECK(dl.pow(p) == AElement::unit(F));
        CHECK(ep.pow(p).is_zero());
        CHECK(em.pow(p).is_zero());
        CHECK(AElement::delta(F, -1) * dl == AElement::unit(F));
    }
}

TEST_CASE("coproduct of an eta power against the repeated-product oracle") {
    const CycField& F = CycField::get(5);
    for (int sign : {+1, -1}) {
        AElement g = sign > 0 ? AElement::eta_plus(F) : AElement::eta_minus(F);
        ATensor dg = g.coproduct();
        ATensor acc = ATensor::unit(F);
        for (int n = 1; n < 5; ++n) {
            acc *= dg;
            CHECK(acc == g.pow(n).coproduct());
        }
    }
}

TEST_CASE("binomial coefficient inside the eta-power coproduct") {
    // picks the (eta^1 delta, eta^1) term of the square and compares with the
    // signed q-binomial
    const CycField& F = CycField::get(5);
    ATensor d = AElement::eta_plus(F).pow(2).coproduct();
    ParamScalar c(F);
    for (const auto& [legs, cc] : d.terms())
        if (legs.first == AMonomial{1, 0, 1} && legs.second == AMonomial{1, 0, 0})
            c = cc;
    CHECK(c == ParamScalar::from_cyc(q_binom(F, 2, 1, +1)));
}

TEST_CASE("counit and antipode on the reduced generators") {
    const CycField& F = CycField::get(3);
    CHECK(AElement::eta_plus(F).counit().is_zero());
    CHECK(AElement::delta(F).counit() == ParamScalar::one(F));
    CHECK(AElement::delta(F).antipode() == AElement::delta(F, -1));
    CHECK(AElement::eta_plus(F).antipode() ==
          -(AElement::delta(F, -1) * AElement::eta_plus(F)));
    AElement x = AElement::monomial(F, {2, 1, 2});
    CHECK(x.star().star() == x);
}

TEST_CASE("idempotents of the circle subalgebra resolve the identity") {
    for (int p : {3, 5}) {
        const CycField& F = CycField::get(p);
        AElement sum(F);
        for (int m = 0; m < p; ++m) {
            AElement zm = zeta_idempotent(F, m);
            sum += zm;
            CHECK(zm * zm == zm);
            CHECK(zm * zeta_idempotent(F, (m + 1) % p) == AElement::zero(F));
            CHECK(AElement::delta(F) * zm == zm * Cyc::q(F, m));
        }
        CHECK(sum == AElement::unit(F));
    }
}

TEST_CASE("translation-part coproduct corrections square to zero") {
    const CycField& F = CycField::get(3);
    for (int sign : {+1, -1}) {
        ATensor B = b_plus_minus(F, sign);
        CHECK((B * B).is_zero());
        // z is primitive up to the correction term
        ETensor dz = EElement::z(F, sign).coproduct();
        ETensor want = ETensor::outer(EElement::z(F, sign), EElement::unit(F)) +
                       ETensor::outer(EElement::unit(F), EElement::z(F, sign)) +
                       ETensor::lift(B);
        CHECK(dz == want);
    }
}

TEST_CASE("exponential elements multiply by adding exponents") {
    const CycField& F = CycField::get(3);
    ParamScalar u = ParamScalar::param(F, Param::ChiPlus) * Cyc::i(F);
    ParamScalar v = ParamScalar::param(F, Param::ChiMinus) * Cyc::i(F);
    EElement a = EElement::exp_z(F, u, ParamScalar::zero(F));
    EElement b = EElement::exp_z(F, ParamScalar::zero(F), v);
    CHECK(a * b == EElement::exp_z(F, u, v));
    CHECK(a * a == EElement::exp_z(F, u + u, ParamScalar::zero(F)));
    CHECK(EElement::exp_z(F, u, v).counit() == ParamScalar::one(F));
    // the antipode flips the sign of the plane coordinates
    CHECK(EElement::exp_z(F, u, v).antipode() == EElement::exp_z(F, -u, -v));
    CHECK(EElement::z(F, 1).antipode() == -EElement::z(F, 1));
    // derivative acts on both polynomial and exponential parts
    EElement f = EElement::z(F, 1) * a;
    CHECK(f.d_dz(1) == a + f * u);
}

TEST_CASE("dual algebra straightening and p-th power carries") {
    for (int p : {3, 5}) {
        const CycField& F = CycField::get(p);
        UElement pp = UElement::p_plus(F), pm = UElement::p_minus(F);
        UElement ka = UElement::kappa(F);
        CHECK(pp * ka == ka * pp * ParamScalar::from_cyc(Cyc::q(F, -1)));
        CHECK(pm * ka == ka * pm * ParamScalar::from_cyc(Cyc::q(F, 1)));
        CHECK(pp * pm == pm * pp);
        CHECK(ka.pow(p) == UElement::unit(F));
        CHECK(pp.pow(p) == UElement::P_plus(F));
        CHECK(pm.pow(p) == UElement::P_minus(F));
        UElement x = UElement::monomial(F, {1, 0, p - 1, 2, 1});
        CHECK(UElement::P_plus(F) * x == x * UElement::P_plus(F));
    }
}

TEST_CASE("dual coalgebra on the generators") {
    const CycField& F = CycField::get(3);
    UElement pp = UElement::p_plus(F);
    UElement ka = UElement::kappa(F);
    UTensor want = UTensor::outer(pp, ka) + UTensor::outer(UElement::kappa(F, -1), pp);
    CHECK(pp.coproduct() == want);
    CHECK(ka.coproduct() == UTensor::outer(ka, ka));
    UTensor wP = UTensor::outer(UElement::P_plus(F), UElement::unit(F)) +
                 UTensor::outer(UElement::unit(F), UElement::P_plus(F));
    CHECK(UElement::P_plus(F).coproduct() == wP);
    CHECK(pp.counit().is_zero());
    CHECK(ka.counit() == ParamScalar::one(F));
    CHECK(pp.antipode() == -(pp * ParamScalar::from_cyc(Cyc::q(F, 1))));
    CHECK(ka.antipode() == UElement::kappa(F, -1));
    CHECK(UElement::P_plus(F).antipode() == -UElement::P_plus(F));
    CHECK(pp.star() == pp);
    UElement w = pp * UElement::p_minus(F) * ka;
    CHECK(w.star().star() == w);
}
