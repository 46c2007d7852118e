#include <benchmark/benchmark.h>

#include "landau/oracle.hpp"
#include "landau/peano.hpp"

using namespace landau;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_SimplexPointwiseLp(benchmark::State& state) {
  const int M = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lp_max_pointwise_derivative(1, 1, 1, 0, M, mode(state)).value);
}
BENCHMARK(BM_SimplexPointwiseLp)->ArgsProduct({{0, 1}, {200, 400}})->Unit(benchmark::kMillisecond);

void BM_VandermondeCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(vandermonde_certificate(n, n / 2, 201, mode(state)).B);
}
BENCHMARK(BM_VandermondeCertificate)->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_BangBangRestarts(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bangbang_sigma1_search(1, 1, 3, 5, static_cast<int>(state.range(1)), 1, mode(state)).value);
}
BENCHMARK(BM_BangBangRestarts)->ArgsProduct({{0, 1}, {8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
