#include <benchmark/benchmark.h>

#include <cmath>

#include "raag/asymptotics.hpp"
#include "raag/cliques.hpp"
#include "raag/graph.hpp"

namespace {

void BM_SampleGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    raag::Graph g = raag::sample_gnp(raag::GnpParams(n, 0.5, seed++));
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_SampleGnp)->Arg(100)->Arg(300);

void BM_CliqueNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    raag::Graph g = raag::sample_gnp(raag::GnpParams(n, 0.5, seed++));
    benchmark::DoNotOptimize(raag::clique_number(g));
  }
}
BENCHMARK(BM_CliqueNumber)->Arg(80)->Arg(120)->Arg(150);

void BM_CountTriangles(benchmark::State& state) {
  const raag::Graph g = raag::sample_gnp(raag::GnpParams(300, 0.1, 7));
  for (auto _ : state)
    benchmark::DoNotOptimize(raag::count_cliques_of_size(g, 3));
}
BENCHMARK(BM_CountTriangles);

void BM_CliqueCountVector(benchmark::State& state) {
  const raag::Graph g = raag::sample_gnp(raag::GnpParams(45, 0.4, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(raag::clique_count_vector(g).counts.size());
}
BENCHMARK(BM_CliqueCountVector);

void BM_DisjointPair(benchmark::State& state) {
  const raag::Graph g =
      raag::sample_gnp(raag::GnpParams(static_cast<int>(state.range(0)), 0.5, 5));
  for (auto _ : state)
    benchmark::DoNotOptimize(raag::max_disjoint_clique_pair(g).r);
}
BENCHMARK(BM_DisjointPair)->Arg(60)->Arg(100);

void BM_SecondMomentRatio(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(std::floor(raag::z_statistic(n, 0.5) - 0.25));
  for (auto _ : state)
    benchmark::DoNotOptimize(raag::second_moment_ratio(n, 0.5, r).ratio);
}
BENCHMARK(BM_SecondMomentRatio)->Arg(10000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
