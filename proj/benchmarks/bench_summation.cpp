#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "eisentrig/numeric/eisenstein.hpp"
#include "eisentrig/trig/trig.hpp"

using namespace eisentrig;

namespace
{

// Tolerance 10^-exponent.
PrecisionContext context(std::int64_t exponent, SumMethod method = SumMethod::accelerated)
{
    return PrecisionContext(192, "1e-" + std::to_string(exponent)).with_method(method);
}

void BM_lattice_accelerated(benchmark::State &state)
{
    const PrecisionContext ctx = context(state.range(0));
    const Complex z = Complex::parse("0.3+0.4i", 192);
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric::eisenstein_k(2, z, ctx));
    }
}
BENCHMARK(BM_lattice_accelerated)->Arg(4)->Arg(12)->Arg(30)->Arg(50);

// Direct summation needs about 2/tol terms, so only loose tolerances fit
// under the term cap.
void BM_lattice_direct(benchmark::State &state)
{
    const PrecisionContext ctx = context(state.range(0), SumMethod::direct);
    const Complex z = Complex::parse("0.3+0.4i", 192);
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric::eisenstein_k(2, z, ctx));
    }
}
BENCHMARK(BM_lattice_direct)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_zeta_accelerated(benchmark::State &state)
{
    const PrecisionContext ctx = context(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric::zeta_even(2, ctx));
    }
}
BENCHMARK(BM_zeta_accelerated)->Arg(12)->Arg(30)->Arg(50);

void BM_zeta_direct(benchmark::State &state)
{
    const PrecisionContext ctx = context(state.range(0), SumMethod::direct);
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric::zeta_even(2, ctx));
    }
}
BENCHMARK(BM_zeta_direct)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

// Heights far up the strip force precision escalation.
void BM_strip_decay(benchmark::State &state)
{
    const PrecisionContext ctx = PrecisionContext::standard();
    const std::vector<Real> ys{Real(state.range(0), ctx.bits())};
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric::strip_decay(ys, Real(ctx.bits()), ctx));
    }
}
BENCHMARK(BM_strip_decay)->Arg(1)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_cosine(benchmark::State &state)
{
    const trig::TrigEvaluator ev(PrecisionContext::standard());
    const Complex z = Complex::parse("2.5", 128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.cosine(z));
    }
}
BENCHMARK(BM_cosine);

} // namespace

BENCHMARK_MAIN();
