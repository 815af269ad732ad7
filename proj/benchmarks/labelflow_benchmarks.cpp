#include <benchmark/benchmark.h>

#include <map>

#include "labelflow/benchgen.hpp"
#include "labelflow/diagnostics.hpp"
#include "labelflow/metrics.hpp"
#include "labelflow/propagation.hpp"

namespace {

using namespace labelflow;

const PlantedGraph& planted(std::size_t n) {
  static std::map<std::size_t, PlantedGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    BenchmarkSpec spec;
    spec.node_count = n;
    spec.mu = 0.3;
    it = cache.emplace(n, generate(spec)).first;
  }
  return it->second;
}

void BM_Generate(benchmark::State& state) {
  BenchmarkSpec spec;
  spec.node_count = static_cast<std::size_t>(state.range(0));
  spec.mu = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(spec));
    ++spec.seed;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Classic(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  PropagationConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(g, cfg));
    ++cfg.seed;
  }
}
BENCHMARK(BM_Classic)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Clpa(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  PropagationConfig cfg;
  cfg.variant = Variant::clpa;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(g, cfg));
    ++cfg.seed;
  }
}
BENCHMARK(BM_Clpa)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Modularity(benchmark::State& state) {
  const PlantedGraph& pg = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(modularity(pg.graph, pg.ground_truth.labels()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pg.graph.edge_count()));
}
BENCHMARK(BM_Modularity)->Arg(1000)->Arg(10000);

void BM_Nmi(benchmark::State& state) {
  const PlantedGraph& pg = planted(static_cast<std::size_t>(state.range(0)));
  const auto found = run(pg.graph, PropagationConfig{}).labeling;
  for (auto _ : state) benchmark::DoNotOptimize(nmi(found.labels(), pg.ground_truth.labels()));
}
BENCHMARK(BM_Nmi)->Arg(1000)->Arg(10000);

void BM_Attraction(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(flood_fill_report(g));
}
BENCHMARK(BM_Attraction)->Arg(1000)->Arg(10000);

}  // namespace
BENCHMARK_MAIN();
