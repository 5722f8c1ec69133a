#include <newton_mv/lattice_geometry.hpp>
#include <newton_mv/sampling.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace newton_mv;

namespace {

// args: dimension, number of points, coordinate bound
void BM_ConvexHull(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto points = static_cast<std::size_t>(state.range(1));
    std::mt19937_64 rng(42);
    const SupportSet a = random_support(rng, dim, points, state.range(2), points);
    for (auto _ : state)
        benchmark::DoNotOptimize(convex_hull(a));
    state.counters["points"] = static_cast<double>(a.size());
}
BENCHMARK(BM_ConvexHull)->Args({2, 20, 10})->Args({2, 200, 100})->Args({3, 30, 5})->Args({3, 100, 10})->Args({4, 30, 3});

void BM_Volume(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    const Polytope p = random_lattice_polytope(rng, dim, static_cast<std::size_t>(state.range(1)), state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(volume(p));
}
BENCHMARK(BM_Volume)->Args({2, 20, 10})->Args({3, 20, 5})->Args({4, 20, 3});

void BM_MinkowskiSum(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(11);
    const Polytope p = random_lattice_polytope(rng, dim, 8, 3, 8);
    const Polytope q = random_lattice_polytope(rng, dim, 8, 3, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(minkowski_sum(p, q));
}
BENCHMARK(BM_MinkowskiSum)->DenseRange(2, 4);

void BM_LatticePoints(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    const Polytope p = random_lattice_polytope(rng, 3, 10, state.range(0), 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(lattice_points(p));
}
BENCHMARK(BM_LatticePoints)->Arg(3)->Arg(6);

} // namespace
