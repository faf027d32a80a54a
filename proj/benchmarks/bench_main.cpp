#include <benchmark/benchmark.h>

#include "eqp/algebra_a.hpp"
#include "eqp/pairing.hpp"
#include "eqp/repr.hpp"

using namespace eqp;

static void BM_AlgebraMultiply(benchmark::State& state) {
    const CycField& F = CycField::get(static_cast<int>(state.range(0)));
    const int p = F.p;
    AElement x(F), y(F);
    for (int n = 0; n < p; ++n)
        for (int m = 0; m < p; ++m) {
            x += AElement::monomial(F, {n, m, (n + m) % p}) * Cyc(F, n + 1);
            y += AElement::monomial(F, {m, n, (2 * n) % p}) * Cyc(F, m + 2);
        }
    for (auto _ : state) {
        AElement z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_AlgebraMultiply)->Arg(3)->Arg(5)->Arg(7);

static void BM_Coproduct(benchmark::State& state) {
    const CycField& F = CycField::get(static_cast<int>(state.range(0)));
    AElement x = AElement::monomial(F, {F.p - 1, F.p - 1, 1});
    for (auto _ : state) {
        auto d = x.coproduct();
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Coproduct)->Arg(3)->Arg(5)->Arg(7);

static void BM_PairingEval(benchmark::State& state) {
    const CycField& F = CycField::get(static_cast<int>(state.range(0)));
    const int p = F.p;
    UElement w = UElement::p_plus(F) * UElement::p_minus(F) * UElement::kappa(F);
    EElement a = EElement(AElement::monomial(F, {p - 1, p - 1, 1})) *
                 EElement::z(F, 1) * EElement::z(F, -1);
    for (auto _ : state) {
        Pairing pr(F);  // fresh memo each round so the recursion is timed
        ParamScalar v = pr.pair(w, a);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PairingEval)->Arg(3)->Arg(5);

static void BM_TMatrixBuild(benchmark::State& state) {
    const CycField& F = CycField::get(3);
    for (auto _ : state) {
        EMatrix T = universal_T_rep(F, rep_L(F));
        benchmark::DoNotOptimize(T);
    }
}
BENCHMARK(BM_TMatrixBuild);

BENCHMARK_MAIN();
