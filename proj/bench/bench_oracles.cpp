#include <benchmark/benchmark.h>

#include "countkern/oracles.hpp"

using namespace countkern;

namespace {

Graph bench_graph(benchmark::State &state)
{
	return oracles::random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 7);
}

void vc_parallel(benchmark::State &state)
{
	auto g = bench_graph(state);
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::count_vertex_covers(g, g.n() / 2));
}

void vc_serial(benchmark::State &state)
{
	auto g = bench_graph(state);
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::serial::count_vertex_covers(g, g.n() / 2));
}

void oct_parallel(benchmark::State &state)
{
	auto g = bench_graph(state);
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::count_odd_cycle_transversals(g, 4));
}

void oct_serial(benchmark::State &state)
{
	auto g = bench_graph(state);
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::serial::count_odd_cycle_transversals(g, 4));
}

void mincut_parallel(benchmark::State &state)
{
	auto g = bench_graph(state);
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::count_min_st_cuts(g, {0, 1}));
}

void mincut_serial(benchmark::State &state)
{
	auto g = bench_graph(state);
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::serial::count_min_st_cuts(g, {0, 1}));
}

} // namespace

BENCHMARK(vc_parallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(vc_serial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(oct_parallel)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(oct_serial)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(mincut_parallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(mincut_serial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
