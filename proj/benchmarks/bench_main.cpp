#include <benchmark/benchmark.h>

#include "kdiv/analysis.hpp"
#include "kdiv/domains.hpp"
#include "kdiv/sampling.hpp"
#include "kdiv/solvers.hpp"

using namespace kdiv;

namespace {

Election ic(int m, std::int64_t n, std::uint64_t seed) {
  CultureSpec spec;
  spec.seed = seed;
  return sample_election(spec, m, n);
}

void BM_SwapDistance(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto e = ic(m, 2, 1);
  const auto& a = e.votes()[0].ranking;
  const auto& b = e.votes().back().ranking;
  for (auto _ : state) benchmark::DoNotOptimize(swap_distance(a, b));
}
BENCHMARK(BM_SwapDistance)->Arg(8)->Arg(16)->Arg(64)->Arg(256);

void BM_ExactKemeny(benchmark::State& state) {
  const auto e = ic(static_cast<int>(state.range(0)), 512, 2);
  Budgets b;
  b.condorcet_shortcut = false;
  for (auto _ : state) benchmark::DoNotOptimize(exact_kemeny(e, b).score);
}
BENCHMARK(BM_ExactKemeny)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PartitionDp(benchmark::State& state) {
  const auto e = ic(7, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_partition_dp(e, 3).score);
}
BENCHMARK(BM_PartitionDp)->Arg(8)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SingleCrossing(benchmark::State& state) {
  Rng rng(4);
  const auto chain = generate_sc_chain(rng, 16);
  CultureSpec spec;
  spec.kind = Culture::IcDomain;
  spec.seed = 5;
  SamplingContext ctx;
  ctx.domain = &chain;
  const auto e = sample_election(spec, 16, state.range(0), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(solve_single_crossing(e, 4).score);
}
BENCHMARK(BM_SingleCrossing)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_LocalSearch(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto e = ic(8, 512, 6);
  const auto space = build_search_space(e, nullptr, 512, 7);
  LocalSearchOptions opts;
  opts.seed = 8;
  for (auto _ : state) benchmark::DoNotOptimize(local_search(e, k, space, opts).score);
}
BENCHMARK(BM_LocalSearch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Enumerate2D(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(9);
  Embedding emb;
  do emb = Embedding::uniform_cube(m, 2, rng);
  while (!emb.general_position());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_euclidean(emb).size());
}
BENCHMARK(BM_Enumerate2D)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
