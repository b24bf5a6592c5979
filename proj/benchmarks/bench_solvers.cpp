#include <benchmark/benchmark.h>

#include "zf/generators.hpp"
#include "zf/solvers.hpp"
#include "zf/structure.hpp"

namespace {

void BM_IndependenceNumber(benchmark::State& state) {
  const zf::Graph g =
      zf::random_claw_free_cubic(static_cast<int>(state.range(0)), 0.5, 9);
  for (auto _ : state) {
    auto result = zf::independence_number(g);
    benchmark::DoNotOptimize(result.alpha);
  }
}
BENCHMARK(BM_IndependenceNumber)->Arg(4)->Arg(6)->Arg(8);

void BM_MatchingNumber(benchmark::State& state) {
  const zf::Graph g =
      zf::random_claw_free_cubic(static_cast<int>(state.range(0)), 0.5, 9);
  for (auto _ : state) {
    auto result = zf::matching_number(g);
    benchmark::DoNotOptimize(result.alpha_prime);
  }
}
BENCHMARK(BM_MatchingNumber)->Arg(4)->Arg(8)->Arg(12);

void BM_TriangleDiamondPartition(benchmark::State& state) {
  const zf::Graph g =
      zf::random_claw_free_cubic(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) {
    auto partition = zf::triangle_diamond_partition(g);
    benchmark::DoNotOptimize(partition.units.size());
  }
}
BENCHMARK(BM_TriangleDiamondPartition)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
