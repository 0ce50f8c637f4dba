#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ellcauchy/gauss_decomposition.hpp"
#include "ellcauchy/matrix_builder.hpp"
#include "ellcauchy/oracle.hpp"

using namespace ellcauchy;

namespace
{

SigmaKernel kernel_by_index(int index)
{
    switch (index) {
    case 1:
        return SigmaKernel::trigonometric(1.0);
    case 2:
        return SigmaKernel::elliptic(LatticeParams(0.5, {0.0, 1.0}));
    default:
        return SigmaKernel::rational();
    }
}

// Interlaced q and r on a segment inside the fundamental cell, so the
// unpivoted LU baseline does not break down on large N.
CauchyProblem interlaced(std::size_t n, const SigmaKernel &kernel, double half_width)
{
    std::mt19937_64 rng(42);
    const double h = 2.0 * half_width / static_cast<double>(n);
    std::uniform_real_distribution<double> jitter(-0.1 * h, 0.1 * h);
    std::vector<Complex> q(n), r(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = -half_width + h * static_cast<double>(k);
        q[k] = {x + jitter(rng), jitter(rng)};
        r[k] = {x + 0.5 * h + jitter(rng), jitter(rng)};
    }
    return CauchyProblem(std::move(q), std::move(r), Complex{0.37, 0.21}, kernel);
}

double half_width(int kernel_index) { return kernel_index == 2 ? 0.45 : 1.4; }

} // namespace

static void BM_ClosedForm(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto kernel = static_cast<int>(state.range(1));
    const CauchyProblem p = interlaced(n, kernel_by_index(kernel), half_width(kernel));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_closed_form(p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)
    ->ArgsProduct({benchmark::CreateRange(32, 512, 2), {0, 1, 2}})
    ->ArgNames({"n", "kernel"})
    ->Unit(benchmark::kMillisecond);

static void BM_ClosedFormRational(benchmark::State &state)
{
    const CauchyProblem p = interlaced(static_cast<std::size_t>(state.range(0)), SigmaKernel::rational(), 1.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_closed_form(p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedFormRational)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNSquared);

static void BM_LuDoolittle(benchmark::State &state)
{
    const DenseMatrix c =
        build_cauchy_like(interlaced(static_cast<std::size_t>(state.range(0)), SigmaKernel::rational(), 1.4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::lu_doolittle(c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LuDoolittle)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

static void BM_Peeling(benchmark::State &state)
{
    const CauchyProblem p = interlaced(static_cast<std::size_t>(state.range(0)), SigmaKernel::rational(), 1.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_peeling(p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Peeling)->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);

static void BM_BuildCauchyLike(benchmark::State &state)
{
    const auto kernel = static_cast<int>(state.range(1));
    const CauchyProblem p =
        interlaced(static_cast<std::size_t>(state.range(0)), kernel_by_index(kernel), half_width(kernel));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_cauchy_like(p));
    }
}
BENCHMARK(BM_BuildCauchyLike)->ArgsProduct({{128}, {0, 1, 2}})->ArgNames({"n", "kernel"});

static void BM_SigmaEval(benchmark::State &state)
{
    const SigmaKernel kernel = kernel_by_index(static_cast<int>(state.range(0)));
    const Complex z{0.31, 0.17};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_eval(kernel, z));
    }
}
BENCHMARK(BM_SigmaEval)->DenseRange(0, 2)->ArgName("kernel");

static void BM_EllipticSigmaNome(benchmark::State &state)
{
    // Larger |nome| needs more theta terms.
    const double im_tau = static_cast<double>(state.range(0)) / 10.0;
    const SigmaKernel kernel = SigmaKernel::elliptic(LatticeParams(0.5, {0.0, im_tau}));
    const Complex z{0.31, 0.17};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_eval(kernel, z));
    }
}
BENCHMARK(BM_EllipticSigmaNome)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
