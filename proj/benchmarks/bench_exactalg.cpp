#include <benchmark/benchmark.h>

#include "poissonz/exactalg.hpp"
#include "poissonz/sampling.hpp"

namespace {

using namespace poissonz;

Mat random_skew(std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = s.coordinate();
      m(j, i) = -m(i, j);
    }
  return m;
}

void BM_Rank(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Mat m = random_skew(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(15)->Arg(24)->Arg(35);

// Crosses the switch from memoised expansion to elimination at n = 8.
void BM_Pfaffian(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Mat m = random_skew(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->DenseRange(4, 16, 2);

void BM_SubPfaffianVector(benchmark::State& state) {
  Mat m = random_skew(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sub_pfaffian_vector(m, 6));
}
BENCHMARK(BM_SubPfaffianVector)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
