#include "antiassoc/corpus.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace antiassoc;

namespace {

const Corpus& corpus()
{
    static const Corpus c = load_corpus(ANTIASSOC_BENCH_CORPUS);
    return c;
}

const DegenerationRecord& degeneration(const std::string& id)
{
    for (const auto& d : corpus().degenerations)
        if (d.claim.id == id)
            return d;
    throw std::out_of_range(id);
}

}

static void BM_Cyclo12Multiply(benchmark::State& state)
{
    Cyclo12 a(Rational(3, 7), Rational(-2), Rational(5, 11), Rational(1, 3));
    Cyclo12 b = Cyclo12::omega() + Cyclo12::imag_unit();
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Cyclo12Multiply);

static void BM_KernelRational(benchmark::State& state)
{
    int n = int(state.range(0));
    std::mt19937_64 rng(7);
    Matrix<Rational> m(n, n + 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n + 3; ++j)
            m(i, j) = random_rational(rng, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(m).dim());
}
BENCHMARK(BM_KernelRational)->Arg(10)->Arg(25)->Arg(50);

static void BM_DerivationSystem(benchmark::State& state)
{
    auto t = corpus().at("A5.10").algebra.at();
    for (auto _ : state)
        benchmark::DoNotOptimize(derivations(t).dim());
}
BENCHMARK(BM_DerivationSystem);

static void BM_H2(benchmark::State& state)
{
    auto t = corpus().at(state.range(0) == 3 ? "N3.1" : "N4.1").algebra.at();
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_H2(t).h2_dim());
}
BENCHMARK(BM_H2)->Arg(3)->Arg(4);

static void BM_TsProbe(benchmark::State& state)
{
    const auto& a = corpus().at("N3.2").algebra;
    for (auto _ : state)
        benchmark::DoNotOptimize(probe_Ts_empty(a, int(state.range(0)), 1).counterexamples);
}
BENCHMARK(BM_TsProbe)->Arg(100)->Arg(1000);

static void BM_OrbitDim(benchmark::State& state)
{
    auto t = corpus().at("A5.10").algebra.at();
    for (auto _ : state)
        benchmark::DoNotOptimize(orbit_dim(t));
}
BENCHMARK(BM_OrbitDim);

static void BM_DegenerationExact(benchmark::State& state)
{
    const auto& d = degeneration("A5.14>A5.15");
    const auto& c = corpus();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            check_exact(d.claim, c.at(d.claim.source).algebra, c.at(d.claim.target).algebra, 1).pass);
}
BENCHMARK(BM_DegenerationExact);

static void BM_DegenerationNumeric(benchmark::State& state)
{
    const auto& d = degeneration("A5.26>A5.28");
    const auto& c = corpus();
    LadderConfig cfg;
    cfg.precision = mpfr_prec_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            check_numeric(d.claim, c.at(d.claim.source).algebra, c.at(d.claim.target).algebra, cfg, 1).pass);
}
BENCHMARK(BM_DegenerationNumeric)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
