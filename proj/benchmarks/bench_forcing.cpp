#include <benchmark/benchmark.h>

#include "zf/certify.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"

namespace {

void BM_Closure(benchmark::State& state) {
  const zf::Graph g = zf::necklace(static_cast<int>(state.range(0)));
  const std::vector<int> start = {0, 1, 3};
  for (auto _ : state) {
    auto result = zf::closure(g, start);
    benchmark::DoNotOptimize(result.colored.size());
  }
}
BENCHMARK(BM_Closure)->Arg(2)->Arg(4)->Arg(8);

void BM_ZeroForcingNumber(benchmark::State& state) {
  const zf::Graph g = zf::necklace(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = zf::zero_forcing_number(g);
    benchmark::DoNotOptimize(result.size);
  }
}
BENCHMARK(BM_ZeroForcingNumber)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildCertificate(benchmark::State& state) {
  const zf::Graph g = zf::necklace(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cert = zf::build_certificate(g);
    benchmark::DoNotOptimize(cert.s.size());
  }
}
BENCHMARK(BM_BuildCertificate)->Arg(3)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
