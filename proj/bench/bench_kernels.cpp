#include <benchmark/benchmark.h>

#include "leafage/chordal.hpp"
#include "leafage/leafage.hpp"
#include "leafage/oracle.hpp"
#include "leafage/samples.hpp"
#include "leafage/vertex_leafage.hpp"

using namespace leafage;

namespace {

// Graphs with at least three host leaves so that augmenting-path search has work to do.
Graph branchy(int n) {
  for (std::uint64_t seed = 1;; ++seed) {
    auto g = random_chordal(n, 0.2, seed);
    if (leafage_of(g, {Execution::serial, nullptr}) >= 3) return g;
  }
}

Execution mode(const benchmark::State& state) { return state.range(1) != 0 ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) != 0 ? "parallel" : "serial"); }

void BM_MinimizeLeafage(benchmark::State& state) {
  const auto g = branchy(static_cast<int>(state.range(0)));
  const auto cg = clique_graph(g);
  const auto t = build_clique_tree(cg);
  const LeafageOptions options{mode(state), nullptr};
  for (auto _ : state) benchmark::DoNotOptimize(minimize_leafage(cg, t, options));
  label(state);
}

void BM_VertexLeafage(benchmark::State& state) {
  const auto g = branchy(static_cast<int>(state.range(0)));
  const VertexLeafageOptions options{BudgetMode::safe, mode(state)};
  for (auto _ : state) benchmark::DoNotOptimize(vertex_leafage_bounded(g, std::nullopt, options));
  label(state);
}

void BM_WorkedExample(benchmark::State& state) {
  const auto g = samples::worked_example_graph();
  const LeafageOptions options{mode(state), nullptr};
  for (auto _ : state) benchmark::DoNotOptimize(minimize_leafage(g, options));
  label(state);
}

}  // namespace

BENCHMARK(BM_WorkedExample)->Args({0, 0})->Args({0, 1});
BENCHMARK(BM_MinimizeLeafage)->ArgsProduct({{10, 16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VertexLeafage)->ArgsProduct({{10, 16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
