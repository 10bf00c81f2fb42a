#include <benchmark/benchmark.h>

#include "riskset/audits.hpp"
#include "riskset/catalog.hpp"
#include "riskset/gauge.hpp"
#include "riskset/measures.hpp"

using namespace riskset;

namespace {

RandVar sample_var(std::size_t n, std::uint64_t seed) {
  Rng r(seed);
  return random_var(ProbSpace::uniform(n), r);
}

void BM_ExpectedShortfall(benchmark::State& state) {
  RandVar x = sample_var(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(expected_shortfall(x, 0.05));
}
BENCHMARK(BM_ExpectedShortfall)->Arg(8)->Arg(64)->Arg(512);

void BM_IsComonotonic(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng r(2);
  auto [x, y] = sample_comonotonic_pair(ProbSpace::uniform(n), r);
  for (auto _ : state) benchmark::DoNotOptimize(is_comonotonic(x, y));
}
BENCHMARK(BM_IsComonotonic)->Arg(8)->Arg(32)->Arg(128);

void BM_ComonotonicPairSampler(benchmark::State& state) {
  auto space = ProbSpace::uniform(static_cast<std::size_t>(state.range(0)));
  Rng r(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_comonotonic_pair(space, r));
}
BENCHMARK(BM_ComonotonicPairSampler)->Arg(8)->Arg(64);

void BM_RhoBisection(benchmark::State& state) {
  auto space = ProbSpace::uniform(8);
  AcceptanceSet set = es_set(space, 0.1);
  RandVar x = sample_var(8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rho(set, x, 1e-9));
}
BENCHMARK(BM_RhoBisection);

void BM_DevBisection(benchmark::State& state) {
  auto space = ProbSpace::uniform(8);
  AcceptanceSet set = sd_ball(space, 1.0);
  RandVar x = sample_var(8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_dev(set, x, 1e-9));
}
BENCHMARK(BM_DevBisection);

void BM_ComonotonicConvexAudit(benchmark::State& state) {
  auto space = ProbSpace::uniform(4);
  AcceptanceSet set = es_set(space, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_convex_on_pairs(set, comonotonic_pair_sampler(space), 42, 200));
  }
}
BENCHMARK(BM_ComonotonicConvexAudit);

}  // namespace

BENCHMARK_MAIN();
