#include <benchmark/benchmark.h>

#include "modseven/invariants.hpp"
#include "modseven/modforms.hpp"
#include "modseven/parse.hpp"
#include "modseven/tate.hpp"

using namespace modseven;

static void BM_SigmaRelationQexp(benchmark::State& state) {
    MultiPoly sig2 = parse_expr("z1*z2 + z2*z3 + z3*z1", zctx());
    for (auto _ : state) {
        QSeries s = qexp_of_mf7(sig2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SigmaRelationQexp)->Arg(15)->Arg(25)->Arg(40);

static void BM_AlphaSeries(benchmark::State& state) {
    for (auto _ : state) {
        AlphaSeries a = alpha_series(7, 1, 0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_AlphaSeries)->Arg(16)->Arg(25);

static void BM_Basis48Certificate(benchmark::State& state) {
    for (auto _ : state) {
        Basis48Certificate c = basis48_certificate();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Basis48Certificate);

static void BM_ExpandInBasis48(benchmark::State& state) {
    const SBasisData& s = s_basis();
    for (auto _ : state) {
        Basis48Expansion e = expand_in_basis48(s.elems[6]);  // s1^2 n6, degree 8
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_ExpandInBasis48);

static void BM_SplittingCertificate(benchmark::State& state) {
    for (auto _ : state) {
        SplittingCertificate c = splitting_iso_check();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SplittingCertificate);

BENCHMARK_MAIN();
