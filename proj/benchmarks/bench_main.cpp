#include <benchmark/benchmark.h>

#include "quatinv/polyfactor.hpp"

namespace {

void BM_discriminant_quintic(benchmark::State& state) {
  quatinv::ZPoly f{1, 3, -6, -1, -1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(quatinv::discriminant(f));
}
BENCHMARK(BM_discriminant_quintic);

void BM_ddf_u64(benchmark::State& state) {
  std::vector<uint64_t> f = {5, 11, 1000003 - 2, 1000003 - 7, 0, 1};
  std::vector<int> degs;
  for (auto _ : state) {
    quatinv::ddf_degrees_u64(f, 1000003, degs);
    benchmark::DoNotOptimize(degs);
  }
}
BENCHMARK(BM_ddf_u64);

}  // namespace

BENCHMARK_MAIN();
