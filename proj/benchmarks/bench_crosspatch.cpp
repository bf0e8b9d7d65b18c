#include <benchmark/benchmark.h>

#include "crosspatch/crosspatch.hpp"

namespace cp = crosspatch;

namespace {

void count_pseudotours(benchmark::State& state, const cp::Board& board, bool symmetry) {
  const cp::CrossTable table(board);
  cp::EnumerationOptions options;
  options.symmetry_reduction = symmetry;
  std::uint64_t found = 0;
  for (auto _ : state) {
    found = 0;
    const auto summary = cp::enumerate_pseudotours(table, options, [&](const cp::RedSet&) { return ++found, true; });
    benchmark::DoNotOptimize(summary.nodes);
  }
  state.counters["pseudotours"] = static_cast<double>(found);
}

void BM_CrossTable(benchmark::State& state) {
  const auto board = cp::Board::rectangle(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    cp::CrossTable table(board);
    benchmark::DoNotOptimize(table.colorable_edges().data());
  }
}
BENCHMARK(BM_CrossTable)->Arg(8)->Arg(16)->Arg(32);

void BM_Enumerate6x8(benchmark::State& state) { count_pseudotours(state, cp::Board::rectangle(6, 8), false); }
BENCHMARK(BM_Enumerate6x8);

void BM_Enumerate8x8(benchmark::State& state) { count_pseudotours(state, cp::Board::rectangle(8, 8), false); }
BENCHMARK(BM_Enumerate8x8);

void BM_Enumerate8x8Symmetry(benchmark::State& state) {
  count_pseudotours(state, cp::Board::rectangle(8, 8), true);
}
BENCHMARK(BM_Enumerate8x8Symmetry);

void BM_Enumerate8x10(benchmark::State& state) { count_pseudotours(state, cp::Board::rectangle(8, 10), false); }
BENCHMARK(BM_Enumerate8x10)->Unit(benchmark::kMillisecond);

void BM_EnumerateTorus6x6(benchmark::State& state) { count_pseudotours(state, cp::Board::torus(6, 6), false); }
BENCHMARK(BM_EnumerateTorus6x6)->Unit(benchmark::kMillisecond);

void BM_VerifyPseudotours8x8(benchmark::State& state) {
  const cp::CrossTable table(cp::Board::rectangle(8, 8));
  const auto all = cp::all_pseudotours(table);
  for (auto _ : state)
    for (const auto& reds : all) benchmark::DoNotOptimize(cp::verify_pseudotour(table, reds).pass());
  state.counters["pseudotours"] = static_cast<double>(all.size());
}
BENCHMARK(BM_VerifyPseudotours8x8)->Unit(benchmark::kMillisecond);

void BM_OpenTour(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cp::TourQuery query{cp::Board::rectangle(n, n), cp::TourKind::Open, 50'000'000};
  for (auto _ : state) benchmark::DoNotOptimize(cp::search_open_tour(query).nodes);
}
BENCHMARK(BM_OpenTour)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TorusCounterexample(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cp::find_odd_degree_counterexample(cp::Topology::Torus, 8).witness.has_value());
}
BENCHMARK(BM_TorusCounterexample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
