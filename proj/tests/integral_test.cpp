#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqp/integral.hpp"

using namespace eqp;

TEST_CASE("the invariant integral picks the top monomial with weight 1/q") {
    const CycField& F = CycField::get(3);
    CHECK(integral_reduced(AElement::monomial(F, {2, 2, 0})) ==
          ParamScalar::from_cyc(Cyc::q(F, -1)));
    CHECK(integral_reduced(AElement::monomial(F, {2, 2, 1})).is_zero());
    CHECK(integral_reduced(AElement::monomial(F, {1, 2, 0})).is_zero());
    CHECK(integral_reduced(AElement::unit(F)).is_zero());
}

TEST_CASE("both invariance identities hold on every basis monomial") {
    for (int p : {3, 5}) {
        const CycField& F = CycField::get(p);
        for (int n = 0; n < p; ++n)
            for (int m = 0; m < p; ++m)
                for (int k = 0; k < p; ++k) {
                    AElement x = AElement::monomial(F, {n, m, k});
                    auto d = x.coproduct();
                    ParamScalar val = integral_reduced(x);
                    AElement left(F), right(F);
                    for (const auto& [legs, c] : d.terms()) {
                        left += AElement::monomial(F, legs.first) * c *
                                integral_reduced(AElement::monomial(F, legs.second));
                        right += AElement::monomial(F, legs.second) * c *
                                 integral_reduced(AElement::monomial(F, legs.first));
                    }
                    CHECK(left == AElement::unit(F) * val);
                    CHECK(right == AElement::unit(F) * val);
                }
    }
}

TEST_CASE("the space of invariant functionals is one-dimensional") {
    for (int p : {3, 5}) {
        const CycField& F = CycField::get(p);
        FunctionalSpace fs = invariant_functional_space(F);
        REQUIRE(fs.dimension == 1);
        REQUIRE(fs.basis.size() == 1);
        const auto& [mono, c] = *fs.basis.begin();
        CHECK(mono == AMonomial{p - 1, p - 1, 0});
        CHECK(!c.is_zero());
    }
}

TEST_CASE("circle form pairs complementary delta powers") {
    const CycField& F = CycField::get(5);
    for (int n = 0; n < 5; ++n)
        for (int m = 0; m < 5; ++m) {
            int want = (n + m == 0 ? 1 : 0) + (n + m == 5 ? 1 : 0);
            CHECK(herm_S(AElement::delta(F, n), AElement::delta(F, m)) ==
                  ParamScalar::from_cyc(Cyc(F, want)));
        }
    CHECK_THROWS(integral_S(AElement::eta_plus(F)));
}

TEST_CASE("coset-space basis is orthogonal with unit pseudo-norms") {
    for (int p : {3, 5}) {
        const CycField& F = CycField::get(p);
        const int n0 = (p - 1) / 2;
        auto in_range = [&](int n, int m, int sign) {
            if (n < n0) return m <= 2 * n0;
            return m <= n0 && !(sign < 0 && m == n0);
        };
        for (int sign : {+1, -1})
            for (int n = 0; n <= n0; ++n)
                for (int m = 0; m <= 2 * n0; ++m) {
                    if (!in_range(n, m, sign)) continue;
                    auto e1 = basis_e_pm(F, n, m, sign);
                    for (int n2 = 0; n2 <= n0; ++n2)
                        for (int m2 = 0; m2 <= 2 * n0; ++m2) {
                            if (!in_range(n2, m2, sign)) continue;
                            auto e2 = basis_e_pm(F, n2, m2, sign);
                            ParamScalar v = herm_reduced(e1.numerator, e2.numerator);
                            ParamScalar want(F);
                            if (n == n2 && m == m2)
                                want = ParamScalar::from_cyc(Cyc(F, sign) *
                                                             e1.normalizer_sq);
                            CHECK(v == want);
                        }
                }
        CHECK_THROWS(basis_e_pm(F, n0, n0, -1));
        CHECK_THROWS(basis_e_pm(F, n0, n0 + 1, +1));
    }
}

TEST_CASE("gram signatures match the pseudo-Euclidean counts") {
    for (int p : {3, 5, 7}) {
        const CycField& F = CycField::get(p);
        CHECK(gram_signature(F, GramSpace::SO) == Signature{(p + 1) / 2, (p - 1) / 2, 0});
        CHECK(gram_signature(F, GramSpace::M) ==
              Signature{(p * p + 1) / 2, (p * p - 1) / 2, 0});
    }
}

TEST_CASE("plane integral: oscillatory, derivative and degenerate rules") {
    const CycField& F = CycField::get(3);
    ParamScalar a = ParamScalar::param(F, Param::ChiPlus) * Cyc::i(F);
    ParamScalar b = ParamScalar::param(F, Param::ChiMinus) * Cyc::i(F);
    DistValue dv = integral_C(EElement::exp_z(F, a, b));
    REQUIRE(dv.parts().size() == 1);
    CHECK(!dv.has_degenerate());
    const auto& [sym, coeff] = *dv.parts().begin();
    CHECK(sym.args.size() == 2);
    CHECK(sym.two_pi_power() == 2);
    CHECK(coeff == ParamScalar::one(F));
    CHECK(integral_C(EElement::z(F, 1) * EElement::exp_z(F, a, b)).is_zero());
    CHECK(integral_C(EElement::unit(F)).has_degenerate());
    // a non-oscillatory exponent is rejected
    ParamScalar real_arg = ParamScalar::param(F, Param::ChiPlus);
    CHECK_THROWS(integral_C(EElement::exp_z(F, real_arg, ParamScalar::zero(F))));
    // coefficients reduce modulo the delta argument
    ParamScalar ab = ParamScalar::param(F, Param::ChiPlus) -
                     ParamScalar::param(F, Param::ChiMinus);
    DistValue d2 = integral_C(EElement::exp_z(F, ab * Cyc::i(F), b));
    for (const auto& [s, c] : d2.parts()) {
        ParamScalar diff = ParamScalar::reduce_mod(
            c * ParamScalar::param(F, Param::ChiPlus) -
                c * ParamScalar::param(F, Param::ChiMinus),
            ab);
        CHECK(diff.is_zero());
    }
}

TEST_CASE("full integral factorizes into reduced and plane parts") {
    const CycField& F = CycField::get(3);
    ParamScalar a = ParamScalar::param(F, Param::ChiPlus) * Cyc::i(F);
    AElement top = AElement::monomial(F, {2, 2, 0});
    EElement osc = EElement::exp_z(F, a, ParamScalar::zero(F));
    CHECK(integral_E(EElement(top) * osc) == integral_C(osc) * integral_reduced(top));
    CHECK(integral_E(EElement(AElement::eta_plus(F)) * osc).is_zero());
}
