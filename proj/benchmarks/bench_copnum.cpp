#include <benchmark/benchmark.h>

#include <random>

#include "copnum/canonical.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/solver.hpp"
#include "copnum/structure.hpp"

using namespace copnum;

namespace {

std::vector<Graph> random_connected(int n, double p, int count) {
  std::mt19937 rng(1234);
  std::bernoulli_distribution coin(p);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

void BM_Solve2Cops10(benchmark::State& state) {
  const auto graphs = random_connected(10, 0.3, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    WinTable t = solve_k(graphs[i++ % graphs.size()], 2);
    benchmark::DoNotOptimize(t.cops_win());
  }
}
BENCHMARK(BM_Solve2Cops10);

void BM_PetersenCopNumber(benchmark::State& state) {
  const Graph p = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(cop_number(p, 4));
}
BENCHMARK(BM_PetersenCopNumber)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = random_connected(static_cast<int>(state.range(0)), 0.4, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10)->Arg(16);

void BM_Prune(benchmark::State& state) {
  const auto graphs = random_connected(10, 0.3, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(prune_c_at_most_2(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_Prune);

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    generate(GenSpec{n}, [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Generate)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
