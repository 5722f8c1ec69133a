#include <newton_mv/sparse_solver.hpp>

#include <benchmark/benchmark.h>

using namespace newton_mv;

namespace {

void BM_CountRoots1d(benchmark::State& state)
{
    std::vector<LatticePoint> pts;
    for (long k = 0; k <= state.range(0); ++k)
        pts.push_back(LatticePoint{k});
    const LaurentPolynomial p = random_polynomial(SupportSet(1, pts), 1, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_roots_torus_1d(p));
}
BENCHMARK(BM_CountRoots1d)->Arg(4)->Arg(16)->Arg(64);

// Two generic polynomials whose supports are the k-dilated standard triangle.
void BM_CountRoots2d(benchmark::State& state)
{
    std::vector<LatticePoint> pts;
    for (long i = 0; i <= state.range(0); ++i)
        for (long j = 0; i + j <= state.range(0); ++j)
            pts.push_back(LatticePoint{i, j});
    const SupportSet a(2, pts);
    const LaurentPolynomial p1 = random_polynomial(a, 1, 50);
    const LaurentPolynomial p2 = random_polynomial(a, 2, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_roots_torus_2d(p1, p2));
}
BENCHMARK(BM_CountRoots2d)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyBk(benchmark::State& state)
{
    const SupportSet t{{0, 0}, {1, 0}, {0, 1}};
    const SupportSet s{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const std::vector<SupportSet> supports{t, s};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_bk(supports, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyBk)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace
