#include "distinguo/catalog.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/parallel.hpp"
#include "distinguo/stability.hpp"

#include <benchmark/benchmark.h>

using namespace distinguo;

namespace {

const std::vector<Graph> &catalog(int n)
{
    static const std::vector<Graph> six = all_graphs(6, true);
    static const std::vector<Graph> seven = all_graphs(7, true);
    return n == 6 ? six : seven;
}

int d_of(const Graph &g) { return compute_D(g).value; }

int st_of(const Graph &g)
{
    DCache cache;
    return compute_stD(g, cache).value;
}

void BM_D_serial(benchmark::State &state)
{
    const auto &graphs = catalog(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial_map(std::span<const Graph>(graphs), d_of));
    state.SetItemsProcessed(state.iterations() * graphs.size());
}

void BM_D_parallel(benchmark::State &state)
{
    const auto &graphs = catalog(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel_map(std::span<const Graph>(graphs), d_of));
    state.SetItemsProcessed(state.iterations() * graphs.size());
}

void BM_stD_serial(benchmark::State &state)
{
    const auto &graphs = catalog(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial_map(std::span<const Graph>(graphs), st_of));
    state.SetItemsProcessed(state.iterations() * graphs.size());
}

void BM_stD_parallel(benchmark::State &state)
{
    const auto &graphs = catalog(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel_map(std::span<const Graph>(graphs), st_of));
    state.SetItemsProcessed(state.iterations() * graphs.size());
}

void BM_bD_subsets(benchmark::State &state)
{
    SubsetSearchOptions options{true, state.range(0) != 0, 16};
    auto g = complement(make_family(FamilySpec::cycle(7)));
    for (auto _ : state) {
        DCache cache;
        benchmark::DoNotOptimize(compute_bD(g, cache, std::nullopt, options).value);
    }
}

}  // namespace

BENCHMARK(BM_D_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_D_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_stD_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stD_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_bD_subsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
