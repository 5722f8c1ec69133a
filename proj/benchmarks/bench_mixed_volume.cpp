#include <newton_mv/mixed_volume.hpp>
#include <newton_mv/sampling.hpp>
#include <newton_mv/support_semigroup.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace newton_mv;

namespace {

// args: dimension, points per body, coordinate bound
void BM_MixedVolume(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2024);
    std::vector<Polytope> bodies;
    for (std::size_t i = 0; i < n; ++i)
        bodies.push_back(random_lattice_polytope(rng, n, static_cast<std::size_t>(state.range(1)), state.range(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mixed_volume(bodies));
}
BENCHMARK(BM_MixedVolume)
    ->Args({2, 6, 3})
    ->Args({2, 20, 10})
    ->Args({3, 6, 2})
    ->Args({3, 10, 4})
    ->Args({4, 5, 2})
    ->Unit(benchmark::kMillisecond);

// Repeated arguments share their partial Minkowski sums.
void BM_RepeatedBodyVolume(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(5);
    const std::vector<Polytope> bodies(n, random_lattice_polytope(rng, n, 8, 3, 8));
    for (auto _ : state)
        benchmark::DoNotOptimize(mixed_volume(bodies));
}
BENCHMARK(BM_RepeatedBodyVolume)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BkCount(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(99);
    std::vector<SupportSet> supports;
    for (std::size_t i = 0; i < n; ++i)
        supports.push_back(random_support(rng, n, 6, 3, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(bk_count(supports));
}
BENCHMARK(BM_BkCount)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Completion(benchmark::State& state)
{
    std::mt19937_64 rng(8);
    const SupportSet a = random_support(rng, 3, 6, state.range(0), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(completion(a));
}
BENCHMARK(BM_Completion)->Arg(2)->Arg(5);

} // namespace
