#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqp/param.hpp"

using namespace eqp;

TEST_CASE("q is a primitive p-th root and its companions behave") {
    for (int p : {3, 5, 7}) {
        const CycField& F = CycField::get(p);
        Cyc q = Cyc::q(F, 1);
        CHECK(q.pow(p) == Cyc::one(F));
        for (int e = 1; e < p; ++e) CHECK(q.pow(e) != Cyc::one(F));
        CHECK(Cyc::i(F) * Cyc::i(F) == -Cyc::one(F));
        CHECK(Cyc::q_half(F, 1) * Cyc::q_half(F, 1) == q);
        CHECK(Cyc::q_half(F, 1).pow(p) == -Cyc::one(F));
        CHECK(std::abs(Cyc::i(F).embed().imag() - 1.0) < 1e-12);
    }
}

TEST_CASE("conjugation is a ring automorphism and an involution") {
    const CycField& F = CycField::get(5);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> de(0, 19), dc(-3, 3);
    for (int t = 0; t < 50; ++t) {
        Cyc a = Cyc::zeta(F, de(rng)) * mpq_class(dc(rng)) + Cyc::zeta(F, de(rng));
        Cyc b = Cyc::zeta(F, de(rng)) - Cyc::zeta(F, de(rng)) * mpq_class(dc(rng));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("numeric embedding is a ring homomorphism") {
    const CycField& F = CycField::get(5);
    CHECK(std::abs(Cyc::q(F, 1).embed() -
                   std::polar(1.0, 2 * 3.14159265358979323846 / 5)) < 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> de(0, 19), dc(-3, 3);
    for (int t = 0; t < 1000; ++t) {
        Cyc a = Cyc::zeta(F, de(rng)) * mpq_class(dc(rng)) + Cyc::one(F);
        Cyc b = Cyc::zeta(F, de(rng)) * mpq_class(dc(rng)) - Cyc::i(F);
        CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-10);
        CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-10);
    }
}

TEST_CASE("q-integers fold back with a sign at the top of the range") {
    for (int p : {3, 5, 7}) {
        const CycField& F = CycField::get(p);
        for (int n = 1; n < p; ++n) {
            CHECK(q_int(F, p - n) == q_int(F, -n));
            CHECK(q_int(F, -n) == -q_int(F, n));
        }
        CHECK(q_int(F, 0).is_zero());
        CHECK(q_int(F, 1) == Cyc::one(F));
    }
    const CycField& F3 = CycField::get(3);
    CHECK(std::abs(q_int(F3, 2).embed() - std::complex<double>(-1, 0)) < 1e-12);
}

TEST_CASE("q-factorials invert exactly below the vanishing order") {
    const CycField& F = CycField::get(7);
    for (int n = 0; n < 7; ++n) CHECK(q_fact(F, n) * q_fact_inv(F, n) == Cyc::one(F));
    CHECK_THROWS(q_fact(F, 7));
}

TEST_CASE("signed q-binomials at the edges") {
    const CycField& F = CycField::get(5);
    for (int n = 0; n < 5; ++n) {
        CHECK(q_binom(F, n, 0, +1) == Cyc::one(F));
        CHECK(q_binom(F, n, n, +1) == Cyc::one(F));
        CHECK(q_binom(F, n, n, -1) == Cyc::one(F));
    }
    CHECK(q_binom(F, 2, 1, +1) == Cyc::q(F, -1) * q_int(F, 2));
}

TEST_CASE("parameter polynomials: arithmetic, conjugation, substitution") {
    const CycField& F = CycField::get(3);
    ParamScalar lp = ParamScalar::param(F, Param::LambdaPlus);
    ParamScalar lm = ParamScalar::param(F, Param::LambdaMinus);
    ParamScalar x = lp * lm * Cyc::i(F) + lp.pow(2);
    CHECK(x.conj() == lp * lm * (-Cyc::i(F)) + lp.pow(2));
    CHECK(x.conj().conj() == x);
    ParamScalar y = x.subst({{Param::LambdaPlus, mpq_class(2)}});
    CHECK(y == lm * Cyc(F, 2) * Cyc::i(F) + ParamScalar::from_cyc(Cyc(F, 4)));
    std::complex<double> v = x.embed({{Param::LambdaPlus, 2.0}, {Param::LambdaMinus, 3.0}});
    CHECK(std::abs(v - std::complex<double>(4.0, 6.0)) < 1e-12);
    CHECK(x.rename({{Param::LambdaMinus, Param::LambdaMinusPrime}}) ==
          lp * ParamScalar::param(F, Param::LambdaMinusPrime) * Cyc::i(F) + lp.pow(2));
}

TEST_CASE("single-divisor polynomial reduction kills multiples of the divisor") {
    const CycField& F = CycField::get(3);
    ParamScalar lp = ParamScalar::param(F, Param::LambdaPlus);
    ParamScalar lq = ParamScalar::param(F, Param::LambdaPlusPrime);
    ParamScalar g = lp - lq;
    // reducing modulo lambda+ - lambda+' identifies the two parameters
    CHECK(ParamScalar::reduce_mod(lp.pow(2) - lq.pow(2), g).is_zero());
    CHECK(ParamScalar::reduce_mod(lp * lq, g) == ParamScalar::reduce_mod(lq.pow(2), g));
}
