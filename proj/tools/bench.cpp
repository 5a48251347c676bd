#include <benchmark/benchmark.h>

#include "crossing/constructions.hpp"
#include "crossing/solver.hpp"

namespace {

using namespace crossing;

Graph instance(std::int64_t i) {
  switch (i) {
    case 0: return Graph::complete(6);
    case 1: return Graph::petersen();
    default: return Graph::complete_bipartite(3, 5);
  }
}

SolverOptions options(int workers) {
  SolverOptions o;
  o.workers = workers;
  return o;
}

void BM_Solve(benchmark::State& state) {
  const Graph g = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, options(static_cast<int>(state.range(1)))));
}

void BM_SolveSerial(benchmark::State& state) {
  const Graph g = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_serial(g, options(1)));
}

const DrawingCertificate& k6_drawing() {
  static const DrawingCertificate c = crossing_number(Graph::complete(6)).certificate;
  return c;
}

void BM_Sample(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_induced(k6_drawing(), 0.5, state.range(0), 42, static_cast<int>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_induced_serial(k6_drawing(), 0.5, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Solve)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample)->ArgsProduct({{100000}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
