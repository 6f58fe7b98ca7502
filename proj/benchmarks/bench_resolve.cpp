#include <benchmark/benchmark.h>

#include <string>

#include "skein/atlcalc.hpp"
#include "skein/tlcalc.hpp"

namespace {

// closure of the (2, n) torus braid
skein::MorseWord torus_word(int n) {
  std::string text = "disk 0 0; cup 1; cup 3";
  for (int i = 0; i < n; ++i) text += "; over 2";
  text += "; cap 3; cap 1";
  return skein::parse_word(text);
}

// a chain of n clasped circles
skein::MorseWord chain_word(int n) {
  std::string text = "disk 0 0";
  for (int i = 0; i < n; ++i) text += "; cup " + std::to_string(2 * i + 1);
  for (int i = 1; i < n; ++i) text += "; over " + std::to_string(2 * i) + "; over " + std::to_string(2 * i);
  for (int i = n - 1; i >= 0; --i) text += "; cap " + std::to_string(2 * i + 1);
  return skein::parse_word(text);
}

void BM_BracketTorus(benchmark::State& state) {
  const skein::MorseWord w = torus_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(skein::bracket(w));
}
BENCHMARK(BM_BracketTorus)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BracketChain(benchmark::State& state) {
  const skein::MorseWord w = chain_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(skein::bracket(w));
}
BENCHMARK(BM_BracketChain)->Arg(3)->Arg(5)->Arg(7);

void BM_ResolveAnnulus(benchmark::State& state) {
  std::string text = "annulus 2 2";
  for (int i = 0; i < state.range(0); ++i) text += "; core over; over 1; rot +1";
  const skein::MorseWord w = skein::parse_word(text);
  for (auto _ : state) benchmark::DoNotOptimize(skein::reduce_annulus(w));
}
BENCHMARK(BM_ResolveAnnulus)->Arg(1)->Arg(2)->Arg(4);

void BM_Glue(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const skein::Element x = skein::dehn_twist(skein::Element::identity(m));
  skein::Element acc = skein::Element::identity(m);
  for (int i = 0; i < 3; ++i) acc = skein::wrap_left(skein::l_poly(), acc);
  for (auto _ : state) benchmark::DoNotOptimize(skein::glue(acc, x));
}
BENCHMARK(BM_Glue)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
