#include <benchmark/benchmark.h>

#include "poissonz/brackets.hpp"
#include "poissonz/invariants.hpp"
#include "poissonz/zconstruct.hpp"

namespace {

using namespace poissonz;

const char* kKeys[] = {"AI:3", "AIII:1,2", "AI:4", "BDI:4,1", "DBL:sl3"};

void BM_NormalizedInvariants(benchmark::State& state) {
  auto p = build_symmetric_pair(kKeys[state.range(0)]);
  state.SetLabel(p.spec.key);
  for (auto _ : state) benchmark::DoNotOptimize(normalized_invariants(p));
}
BENCHMARK(BM_NormalizedInvariants)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SymbolicCommutativity(benchmark::State& state) {
  auto p = build_symmetric_pair(kKeys[state.range(0)]);
  auto z = z_generators(p, normalized_invariants(p));
  VerifyOptions opt{Mode::Symbolic, 1, 5, kDefaultHeight};
  state.SetLabel(p.spec.key);
  for (auto _ : state) benchmark::DoNotOptimize(verify_commutativity(z, p, opt));
}
BENCHMARK(BM_SymbolicCommutativity)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SampledCommutativity(benchmark::State& state) {
  auto p = build_symmetric_pair(kKeys[state.range(0)]);
  auto z = z_generators(p, normalized_invariants(p));
  VerifyOptions opt{Mode::Sampled, 1, 5, kDefaultHeight};
  state.SetLabel(p.spec.key);
  for (auto _ : state) benchmark::DoNotOptimize(verify_commutativity(z, p, opt));
}
BENCHMARK(BM_SampledCommutativity)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_TensorRank(benchmark::State& state) {
  auto p = build_symmetric_pair("AI:4");
  Sampler s(1);
  Vec xi = s.point(p.dim());
  for (auto _ : state) benchmark::DoNotOptimize(rank(tensor_at(p, xi, BracketParam::infinity()).matrix));
}
BENCHMARK(BM_TensorRank);

}  // namespace

BENCHMARK_MAIN();
