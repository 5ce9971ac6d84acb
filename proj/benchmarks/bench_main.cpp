#include <benchmark/benchmark.h>

#include "sopol/families.hpp"
#include "sopol/pencil.hpp"
#include "sopol/sobolev.hpp"

using namespace sopol;

namespace {

WeightFactor y_factor(int r, double alpha) {
    std::vector<CPoly> col(static_cast<size_t>(r) + 1, CPoly::zero());
    col[0] = CPoly::one();
    col[static_cast<size_t>(r)] += CPoly{cplx(alpha)};
    return WeightFactor::column(std::move(col));
}

void BM_FamilyConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CPoly y = y_family({.r = 2, .alpha = -1.0}, n);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_FamilyConstruction)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PolyRoots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CPoly y = y_family({.r = 2, .alpha = -1.0}, n);
    for (auto _ : state) {
        auto roots = poly_roots(y);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_PolyRoots)->Arg(8)->Arg(16)->Arg(24);

void BM_SobolevInner(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SobolevSpaceSpec spec{y_factor(2, -1.0), std::nullopt, make_unit_circle_rule(2 * n + 1)};
    CPoly a = y_family({.r = 2, .alpha = -1.0}, n);
    CPoly b = y_family({.r = 2, .alpha = -1.0}, n - 1);
    for (auto _ : state) {
        cplx v = sobolev_inner(spec, a, b);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SobolevInner)->Arg(8)->Arg(12)->Arg(16);

void BM_GramSchmidt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SobolevSpaceSpec spec{y_factor(2, -1.0), std::nullopt, make_unit_circle_rule(2 * n + 1)};
    for (auto _ : state) {
        auto gs = gram_schmidt_sobolev(spec, n);
        benchmark::DoNotOptimize(gs);
    }
}
BENCHMARK(BM_GramSchmidt)->Arg(8)->Arg(12);

void BM_GaussRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rule = make_gauss_rule(GaussKind::Hermite, n);
        benchmark::DoNotOptimize(rule);
    }
}
BENCHMARK(BM_GaussRule)->Arg(16)->Arg(32)->Arg(64);

void BM_PencilResidual(benchmark::State& state) {
    const int T = 15;
    BandedPencil p = pencil_from_recurrence(PencilFamily::W, {.alpha = -1.0}, T);
    std::vector<CPoly> polys;
    for (int n = 0; n < T + 4; ++n) polys.push_back(w_family(-1.0, n));
    std::vector<cplx> zs = {cplx(0.3), cplx(-1.2), cplx(0.0, 2.0)};
    for (auto _ : state) {
        double r = pencil_residual(p, polys, zs);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PencilResidual);

} // namespace

BENCHMARK_MAIN();
