#include <benchmark/benchmark.h>

#include "poissonz/pencil.hpp"

namespace {

using namespace poissonz;

void BM_JkSummary(benchmark::State& state) {
  Sampler s(static_cast<std::uint64_t>(state.range(0)));
  std::vector<Pencil> pencils;
  for (int i = 0; i < 16; ++i) pencils.push_back(random_block_pencil(s, static_cast<std::size_t>(state.range(0))).pencil);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(jk_summary(pencils[i++ % pencils.size()]));
}
BENCHMARK(BM_JkSummary)->Arg(6)->Arg(10)->Arg(16);

void BM_SingularMembers(benchmark::State& state) {
  std::vector<Pencil> blocks{kronecker_block(2)};
  for (int k = 0; k < state.range(0); ++k) blocks.push_back(jordan_block(Rat(k + 1), 1));
  Pencil p = direct_sum(blocks);
  for (auto _ : state) benchmark::DoNotOptimize(singular_members(p));
}
BENCHMARK(BM_SingularMembers)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
