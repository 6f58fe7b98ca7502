#include <benchmark/benchmark.h>

#include "skein/chebseries.hpp"
#include "skein/dehnverify.hpp"

namespace {

void BM_VerifyMainOneStrand(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skein::verify_main(1, N));
}
BENCHMARK(BM_VerifyMainOneStrand)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyMainReduction(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skein::verify_main(m, 3));
}
BENCHMARK(BM_VerifyMainReduction)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TwistElement(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skein::xc_truncated(N));
}
BENCHMARK(BM_TwistElement)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TwistPower(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skein::verify_lemma421(m, 2));
}
BENCHMARK(BM_TwistPower)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
