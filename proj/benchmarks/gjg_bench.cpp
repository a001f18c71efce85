#include <benchmark/benchmark.h>

#include "gjg/combinadic.hpp"
#include "gjg/formulas.hpp"
#include "gjg/oracle.hpp"
#include "gjg/sweep.hpp"
#include "gjg/witness.hpp"

namespace {

// (v, k, i) packed into the benchmark args.
gjg::Parameters params(const benchmark::State& state) {
  return gjg::make_parameters(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                              static_cast<int>(state.range(2)));
}

void BM_BuildGraph(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(gjg::build_graph(p));
  state.counters["vertices"] = static_cast<double>(gjg::binomial(p.v(), p.k()));
}
BENCHMARK(BM_BuildGraph)->Args({10, 4, 2})->Args({14, 6, 2})->Args({16, 8, 3})->Unit(benchmark::kMillisecond);

void BM_Bfs(benchmark::State& state) {
  const auto g = gjg::build_graph(params(state));
  for (auto _ : state) benchmark::DoNotOptimize(gjg::bfs_distances(g, 0));
}
BENCHMARK(BM_Bfs)->Args({10, 4, 2})->Args({14, 6, 2})->Args({16, 8, 3})->Unit(benchmark::kMicrosecond);

void BM_OddGirthOracle(benchmark::State& state) {
  const auto g = gjg::build_graph(params(state));
  for (auto _ : state) benchmark::DoNotOptimize(gjg::local_odd_girth(g, 0));
}
BENCHMARK(BM_OddGirthOracle)->Args({13, 6, 0})->Args({16, 8, 3})->Unit(benchmark::kMicrosecond);

void BM_InvariantReport(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(gjg::invariant_report(p));
}
BENCHMARK(BM_InvariantReport)->Args({16, 8, 3})->Args({1000, 400, 37});

void BM_Geodesic(benchmark::State& state) {
  const auto p = params(state);
  const auto a = gjg::canonical_vertex(p);
  const auto b = gjg::canonical_partner(p, p.k() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gjg::geodesic(p, a, b));
}
BENCHMARK(BM_Geodesic)->Args({16, 8, 3})->Args({201, 100, 0});

void BM_RankUnrank(benchmark::State& state) {
  const auto p = params(state);
  const auto total = gjg::binomial(p.v(), p.k());
  std::uint64_t r = 0;
  for (auto _ : state) {
    const auto s = gjg::unrank(p, gjg::Rank{r});
    benchmark::DoNotOptimize(gjg::rank(p, s));
    r = (r + 7919) % total;
  }
}
BENCHMARK(BM_RankUnrank)->Args({16, 8, 0})->Args({60, 30, 0});

void BM_VerifyTriple(benchmark::State& state) {
  const auto p = params(state);
  const gjg::SweepConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(gjg::verify_triple(p, config));
}
BENCHMARK(BM_VerifyTriple)->Args({12, 5, 2})->Args({16, 8, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
