#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqp/parse.hpp"
#include "eqp/repr.hpp"

using namespace eqp;

TEST_CASE("products normal-order through the parser") {
    const CycField& F = CycField::get(3);
    CHECK(parse_a(F, "eta-*eta+") ==
          EElement(AElement::eta_plus(F) * AElement::eta_minus(F)) * Cyc::q(F, 2));
    CHECK(parse_a(F, "delta^3") == EElement::unit(F));
    CHECK(parse_a(F, "eta+^3").is_zero());
    CHECK(parse_u(F, "p+*kappa") ==
          UElement::kappa(F) * UElement::p_plus(F) * ParamScalar::from_cyc(Cyc::q(F, -1)));
}

TEST_CASE("scalar literals and implicit multiplication") {
    const CycField& F = CycField::get(3);
    CHECK(parse_a(F, "1/2 eta+") == EElement(AElement::eta_plus(F)) * Cyc(F, mpq_class(1, 2)));
    CHECK(parse_a(F, "q^(1/2) q^(1/2)") == EElement::unit(F) * Cyc::q(F, 1));
    CHECK(parse_a(F, "i*i") == -EElement::unit(F));
    CHECK(parse_a(F, "w^12") == EElement::unit(F));
    CHECK(parse_a(F, "q^-1") == EElement::unit(F) * Cyc::q(F, -1));
    CHECK(parse_a(F, "2(eta+ + eta-)") ==
          EElement(AElement::eta_plus(F) + AElement::eta_minus(F)) * Cyc(F, 2));
}

TEST_CASE("function forms build the special elements") {
    const CycField& F = CycField::get(3);
    EElement x = EElement(AElement::eta_plus(F));
    CHECK(parse_a(F, "qexp+(eta+)") == cutoff_qexp(x, +1));
    CHECK(parse_a(F, "qexp-(eta+)") == cutoff_qexp(x, -1));
    CHECK(parse_a(F, "qbessel(1, eta+*eta-)") ==
          qbessel_cut(1, EElement(AElement::eta_plus(F) * AElement::eta_minus(F))));
    CHECK(parse_a(F, "zeta(2)") == EElement(zeta_idempotent(F, 2)));
    ParamScalar u = ParamScalar::param(F, Param::ChiPlus) * Cyc::i(F);
    CHECK(parse_a(F, "exp(i*chi+*z+)") == EElement::exp_z(F, u, ParamScalar::zero(F)));
}

TEST_CASE("round trip through canonical rendering on a mixed corpus") {
    const CycField& F = CycField::get(3);
    const char* a_corpus[] = {
        "eta+", "eta-", "delta", "z+", "z-", "1", "0", "i", "q", "w",
        "q^(1/2)", "eta+*eta-", "eta-*eta+", "delta^2*eta+", "eta+^2*eta-^2",
        "z+^2*z-", "lambda+*eta+", "lambda-'*delta", "chi+*z+ + chi-*z-",
        "exp(i*chi+*z+)", "exp(i*chi+*z+ + i*chi-*z-)", "qexp+(eta+*delta)",
        "qexp-(eta-)", "qbessel(0, eta+*eta-)", "qbessel(2, eta+)",
        "zeta(0)", "zeta(1)", "zeta(2)", "1/2*eta+ - 1/3*eta-",
        "(eta+ + eta-)^2", "delta*(1 + eta+)", "q^2*eta+ + q^-2*eta-",
        "i*q^(1/2)*eta+*z+", "eta+^2*eta-^2*delta^2*z+^2*z-^2",
        "exp(i*lambda+^3*z+)*eta+", "2 + 3*delta", "w^5*eta-",
        "zeta(1)*eta+", "z+*exp(i*chi+*z+)", "qexp+(i*q^(1/2)*lambda+*eta+)",
    };
    for (const char* s : a_corpus) {
        CAPTURE(s);
        EElement e = parse_a(F, s);
        CHECK(parse_a(F, render(e)) == e);
    }
    const char* u_corpus[] = {
        "p+", "p-", "kappa", "P+", "P-", "p+*p-", "p+*kappa", "kappa*p+",
        "p+^3", "P+*p-^2*kappa^2", "1 + p+", "i*p+ - q*p-",
        "lambda+*P+ + lambda-*P-", "kappa^2*p+*p-",
    };
    for (const char* s : u_corpus) {
        CAPTURE(s);
        UElement x = parse_u(F, s);
        CHECK(parse_u(F, render(x)) == x);
    }
}

TEST_CASE("errors carry positions and sides cannot mix") {
    const CycField& F = CycField::get(3);
    CHECK_THROWS_AS(parse_a(F, "p+*eta+"), ParseError);
    CHECK_THROWS_AS(parse_u(F, "kappa*delta"), ParseError);
    CHECK_THROWS_AS(parse_u(F, "qexp+(p+)"), ParseError);
    CHECK_THROWS_AS(parse_a(F, "eta+^"), ParseError);
    CHECK_THROWS_AS(parse_a(F, "(eta+"), ParseError);
    CHECK_THROWS_AS(parse_a(F, "eta+ @"), ParseError);
    CHECK_THROWS_AS(parse_a(F, "exp(eta+)"), ParseError);
    CHECK_THROWS_AS(parse_a(F, "unknown"), ParseError);
    try {
        parse_a(F, "eta+ * frob");
    } catch (const ParseError& e) {
        CHECK(e.pos() == 7);
    }
}
