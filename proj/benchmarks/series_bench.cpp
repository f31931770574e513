#include <borwein/alpha.hpp>
#include <borwein/asymptotics.hpp>
#include <borwein/bessel.hpp>
#include <borwein/series.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace borwein;

void BM_BorweinCoeffs(benchmark::State& state)
{
    const long t = state.range(0);
    const long m = state.range(1);
    const long n = state.range(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(borwein_coeffs(t, m, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BorweinCoeffs)
    ->Args({2, 24, 1000})
    ->Args({5, 6, 2000})
    ->Args({23, 1, 5000})
    ->Args({23, 1, 21650})
    ->Unit(benchmark::kMillisecond);

void BM_SparseVsDense(benchmark::State& state)
{
    const long n = state.range(0);
    const bool sparse = state.range(1) == 1;
    const IntegerSeries base = borwein_coeffs(3, 2, n);
    const SparseSeries pent = pentagonal_series(1, n);
    const IntegerSeries dense_pent = to_dense(pent, n);
    for (auto _ : state) {
        if (sparse)
            benchmark::DoNotOptimize(mul_sparse(base, pent));
        else
            benchmark::DoNotOptimize(base * dense_pent);
    }
}
BENCHMARK(BM_SparseVsDense)->Args({2000, 1})->Args({2000, 0})->Unit(benchmark::kMillisecond);

void BM_BesselEnclosure(benchmark::State& state)
{
    const long prec = state.range(0);
    const Interval x = Interval::of(Rational(251, 2), prec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_I(-1, x, prec));
    }
}
BENCHMARK(BM_BesselEnclosure)->Arg(128)->Arg(256)->Arg(1024);

void BM_DeltaThreshold(benchmark::State& state)
{
    const AsymptoticConstants c = constants(23, 1, 256);
    const BigFloat c_min = BigFloat::parse("0.65", 256, Rounding::down);
    long n = 21000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_threshold(c, n, c_min));
        if (++n > 22000) n = 21000;
    }
}
BENCHMARK(BM_DeltaThreshold);

void BM_AlphaSign(benchmark::State& state)
{
    const long t = state.range(0);
    for (auto _ : state) {
        for (long r = 0; r < t; ++r) benchmark::DoNotOptimize(alpha_sign(t, 1, r));
    }
}
BENCHMARK(BM_AlphaSign)->Arg(5)->Arg(23);

}  // namespace

BENCHMARK_MAIN();
