#include "qaf/analysis.hpp"
#include "qaf/extremal.hpp"
#include "qaf/piercing.hpp"
#include "qaf/properties.hpp"
#include "qaf/solver.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <unordered_set>

using namespace qaf;

namespace {

SetFamily random_family(std::mt19937_64& rng, std::size_t points, std::size_t sets, std::size_t max_size)
{
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(points - 1));
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::vector<PointSet> v;
    std::unordered_set<PointSet> seen;
    while (v.size() < sets) {
        PointSet s;
        for (std::size_t k = size(rng); s.size() < k;) s.insert(pick(rng));
        if (seen.insert(s).second) v.push_back(s);
    }
    return SetFamily(std::move(v), points);
}

void BM_TauExact(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    auto f = random_family(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(tau_exact(f).tau);
}
BENCHMARK(BM_TauExact)->Args({12, 10})->Args({24, 30})->Args({40, 60});

void BM_CheckPQ(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    auto f = random_family(rng, 10, static_cast<std::size_t>(state.range(0)), 4);
    auto p = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(check_pq(f, p, 3).holds());
}
BENCHMARK(BM_CheckPQ)->Args({12, 4})->Args({20, 5})->Args({30, 6});

void BM_FindRepresentations(benchmark::State& state)
{
    auto f = construct_prop2(1, 1, static_cast<std::size_t>(state.range(0)));
    auto t = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(find_representations(f, t).map.has_value());
}
BENCHMARK(BM_FindRepresentations)->DenseRange(2, 4);

void BM_SearchMaxB(benchmark::State& state)
{
    SearchParams p;
    p.d = static_cast<std::size_t>(state.range(0));
    p.m = 1;
    p.t = 2;
    p.n = p.d + 3;
    p.s_max = p.d + 1;
    p.symmetry_depth = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(search_max_b(p).best_size);
}
BENCHMARK(BM_SearchMaxB)->Args({1, 4})->Args({2, 4})->Args({3, 4})->Args({3, 0})->Unit(benchmark::kMillisecond);

void BM_PiercePencil(benchmark::State& state)
{
    std::vector<PointSet> v;
    for (Point i = 0; i < 56; ++i) v.push_back(PointSet{static_cast<Point>(i % 2), static_cast<Point>(2 + i)});
    SetFamily f(std::move(v), 58);
    for (auto _ : state) benchmark::DoNotOptimize(pierce_pq(f, 5, 3).result.size());
}
BENCHMARK(BM_PiercePencil);

void BM_Audit(benchmark::State& state)
{
    auto f = construct_prop2(1, 1, static_cast<std::size_t>(state.range(0)));
    auto t = static_cast<std::size_t>(state.range(0));
    auto reps = *find_representations(f, t).map;
    for (auto _ : state) benchmark::DoNotOptimize(audit_lemmas(f, 1, 1, t, reps).failures());
}
BENCHMARK(BM_Audit)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
