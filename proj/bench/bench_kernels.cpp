// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

#include "stc/bounds.hpp"
#include "stc/families.hpp"
#include "stc/locbfs.hpp"
#include "stc/oracle.hpp"
#include "stc/planar.hpp"
#include "stc/roc.hpp"
#include "stc/scd.hpp"

using namespace stc;

namespace {

const WeightedGraph& pu(int n)
{
    static std::map<int, WeightedGraph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate({.family = Family::Pu, .sizes = {n}, .seed = 1})).first;
    return it->second;
}

const PlanarEmbedding& grid()
{
    static const PlanarEmbedding emb = build_embedding(generate({.family = Family::RectGrid, .sizes = {20, 20}}));
    return emb;
}

void BM_congestion_serial(benchmark::State& st)
{
    const WeightedGraph& g = pu(static_cast<int>(st.range(0)));
    const SpanningTree t = random_spanning_tree(g, 1);
    for (auto _ : st) benchmark::DoNotOptimize(edge_congestions(g, t));
}

void BM_congestion_parallel(benchmark::State& st)
{
    const WeightedGraph& g = pu(static_cast<int>(st.range(0)));
    const SpanningTree t = random_spanning_tree(g, 1);
    for (auto _ : st) benchmark::DoNotOptimize(edge_congestions_parallel(g, t));
}

void BM_crossing_serial(benchmark::State& st)
{
    const WeightedGraph& g = pu(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(find_crossing(g));
}

void BM_crossing_parallel(benchmark::State& st)
{
    const WeightedGraph& g = pu(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(find_crossing_parallel(g));
}

void BM_cheeger_serial(benchmark::State& st)
{
    const WeightedGraph g = generate({.family = Family::Gnp, .sizes = {18}, .probability = 0.3, .seed = 1});
    for (auto _ : st) benchmark::DoNotOptimize(cheeger_bruteforce_serial(g));
}

void BM_cheeger_parallel(benchmark::State& st)
{
    const WeightedGraph g = generate({.family = Family::Gnp, .sizes = {18}, .probability = 0.3, .seed = 1});
    for (auto _ : st) benchmark::DoNotOptimize(cheeger_bruteforce(g));
}

void BM_max_m_serial(benchmark::State& st)
{
    const WeightedGraph g = generate({.family = Family::Hypercube, .sizes = {6}});
    for (auto _ : st) benchmark::DoNotOptimize(max_m_bound_serial(g, MMode::Exact));
}

void BM_max_m_parallel(benchmark::State& st)
{
    const WeightedGraph g = generate({.family = Family::Hypercube, .sizes = {6}});
    for (auto _ : st) benchmark::DoNotOptimize(max_m_bound(g, MMode::Exact));
}

void BM_scd_restarts(benchmark::State& st)
{
    const WeightedGraph g = generate({.family = Family::Hypercube, .sizes = {7}});
    const bool parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(scd(g, {.p = Norm::infinity(), .seed = 1, .restarts = 8, .parallel = parallel}));
}

void BM_locbfs_roots(benchmark::State& st)
{
    const bool parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(locbfs(grid(), Norm::infinity(), {.parallel = parallel}));
}

void BM_roc_roots(benchmark::State& st)
{
    RocOptions o;
    o.parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(roc(grid(), Norm::infinity(), o));
}

void BM_oracle_threads(benchmark::State& st)
{
    const WeightedGraph g = generate({.family = Family::RectGrid, .sizes = {4, 4}});
    const int saved = omp_get_max_threads();
    omp_set_num_threads(st.range(0) != 0 ? saved : 1);
    for (auto _ : st) benchmark::DoNotOptimize(exact_lp_stc(g, Norm::finite(1)));
    omp_set_num_threads(saved);
}

}  // namespace

BENCHMARK(BM_congestion_serial)->Arg(1000)->Arg(3000);
BENCHMARK(BM_congestion_parallel)->Arg(1000)->Arg(3000);
BENCHMARK(BM_crossing_serial)->Arg(200)->Arg(1000);
BENCHMARK(BM_crossing_parallel)->Arg(200)->Arg(1000);
BENCHMARK(BM_cheeger_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cheeger_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_m_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_m_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scd_restarts)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_locbfs_roots)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_roc_roots)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_threads)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
