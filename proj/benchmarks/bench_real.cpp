#include <benchmark/benchmark.h>

#include "expanderlab/real_expand.hpp"

using namespace expanderlab;

namespace {

void BM_RealEnergy(benchmark::State& state) {
  const auto a = RealSet::random(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mult_energy_real(a));
}
BENCHMARK(BM_RealEnergy)->Arg(8)->Arg(32);

void BM_SolymosiChain(benchmark::State& state) {
  const auto a = RealSet::random(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(solymosi_chain(a, Rational(1)));
}
BENCHMARK(BM_SolymosiChain)->Arg(8)->Arg(16);

void BM_CurveIntersect(benchmark::State& state) {
  const CurveParams c1(1, 2), c2(static_cast<long>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(curve_intersect(c1, c2));
}
BENCHMARK(BM_CurveIntersect)->Arg(2)->Arg(3);

void BM_Pp73(benchmark::State& state) {
  const auto a = RealSet::random(static_cast<std::size_t>(state.range(0)), 5);
  const auto b = RealSet::random(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(pp73_check(a, b));
}
BENCHMARK(BM_Pp73)->Arg(4)->Arg(10);

}  // namespace
