#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqp/pairing.hpp"

using namespace eqp;

TEST_CASE("pairing values on single generators") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    CHECK(pr.pair(UElement::p_plus(F), EElement(AElement::eta_plus(F))) ==
          ParamScalar::from_cyc(Cyc::i(F) * Cyc::q_half(F, 1)));
    CHECK(pr.pair(UElement::p_minus(F), EElement(AElement::eta_minus(F))) ==
          ParamScalar::from_cyc(Cyc::i(F) * Cyc::q_half(F, -1)));
    CHECK(pr.pair(UElement::kappa(F), EElement(AElement::delta(F, 2))) ==
          ParamScalar::from_cyc(Cyc::q(F, 2)));
    CHECK(pr.pair(UElement::P_plus(F), EElement::z(F, 1)) ==
          ParamScalar::from_cyc(Cyc::i(F)));
    CHECK(pr.pair(UElement::P_minus(F), EElement::z(F, -1)) ==
          ParamScalar::from_cyc(Cyc::i(F)));
    // cross terms vanish
    CHECK(pr.pair(UElement::p_plus(F), EElement(AElement::eta_minus(F))).is_zero());
    CHECK(pr.pair(UElement::P_plus(F), EElement::z(F, -1)).is_zero());
}

TEST_CASE("the central generator reads off the exponential coefficient") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    ParamScalar u = ParamScalar::param(F, Param::ChiPlus);
    EElement f = EElement::exp_z(F, u, ParamScalar::zero(F));
    CHECK(pr.pair(UElement::P_plus(F), f) == u * Cyc::i(F));
    CHECK(pr.pair(UElement::P_minus(F), f).is_zero());
}

TEST_CASE("multiplication is dual to comultiplication and back") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    UElement x = UElement::p_plus(F) * UElement::p_minus(F) * UElement::kappa(F);
    UElement y = UElement::p_minus(F);
    EElement f = EElement(AElement::monomial(F, {1, 0, 2}));
    EElement g = EElement(AElement::monomial(F, {1, 1, 0}));

    ParamScalar rhs(F);
    auto df = (f * g).coproduct();
    (void)df;
    auto d = x.coproduct();
    for (const auto& [legs, c] : d.terms()) {
        rhs += c * pr.pair(UElement::monomial(F, legs.first), f) *
               pr.pair(UElement::monomial(F, legs.second), g);
    }
    CHECK(pr.pair(x, f * g) == rhs);

    ParamScalar rhs2(F);
    EElement h = f * g;
    auto dh = h.coproduct();
    for (const auto& [legs, c] : dh.terms()) {
        rhs2 += c * pr.pair(x, EElement::monomial(F, legs.first, ParamScalar::one(F))) *
                pr.pair(y, EElement::monomial(F, legs.second, ParamScalar::one(F)));
    }
    CHECK(pr.pair(x * y, h) == rhs2);

    CHECK(pr.pair(x.antipode(), h) == pr.pair(x, h.antipode()));
}

TEST_CASE("right action differentiates eta powers with a q-integer") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    for (int k = 1; k < 3; ++k) {
        EElement x = EElement(AElement::monomial(F, {k, 0, 0}));
        EElement want = EElement(AElement::monomial(F, {k - 1, 0, 0})) *
                        (Cyc::i(F) * Cyc::q_half(F, 1) * q_int(F, k));
        CHECK(pr.conv_right(x, UElement::p_plus(F)) == want);
    }
    // central elements act as i d/dz on plane waves
    ParamScalar u = ParamScalar::param(F, Param::ChiPlus) * Cyc::i(F);
    EElement g = EElement::exp_z(F, u, ParamScalar::zero(F));
    CHECK(pr.conv_right(g, UElement::P_plus(F)) == g.d_dz(1) * Cyc::i(F));
}

TEST_CASE("closed form reproduces the recursive pairing on separated monomials") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    const int p = 3;
    for (int t = 0; t <= 1; ++t)
        for (int s = 0; s <= 1; ++s)
            for (int n = 0; n < p; ++n)
                for (int m = 0; m < p; ++m)
                    for (int k = 0; k < p; ++k) {
                        UMonomial w{t, s, n, m, k};
                        UElement x = UElement::monomial(F, w);
                        for (int tp = 0; tp <= 1; ++tp)
                            for (int np = 0; np < p; ++np)
                                for (int kp = 0; kp < p; ++kp) {
                                    EElement f =
                                        EElement::z(F, 1, tp) * EElement::z(F, -1, s) *
                                        EElement(AElement::monomial(F, {np, m, 0}) *
                                                 zeta_idempotent(F, kp));
                                    CHECK(pr.pair(x, f) ==
                                          ParamScalar::from_cyc(pair_closed(
                                              F, w, tp, s, np, m, kp)));
                                }
                    }
}

TEST_CASE("pairing memo is consistent under repeated evaluation") {
    const CycField& F = CycField::get(3);
    Pairing pr(F);
    UMonomial w{0, 0, 2, 1, 1};
    EMonomial m{{2, 1, 2}, 0, 0, ParamScalar::zero(F), ParamScalar::zero(F)};
    ParamScalar first = pr.pair_mono(w, m);
    for (int j = 0; j < 3; ++j) CHECK(pr.pair_mono(w, m) == first);
}
