#include <benchmark/benchmark.h>

#include "expanderlab/bounds.hpp"
#include "expanderlab/fp_sets.hpp"

using namespace expanderlab;

namespace {

void BM_Image(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  const auto a = generate(RandomFamily{static_cast<std::uint32_t>(state.range(1)), 7}, p);
  const auto f = FnForm::xy_times_x_plus_y(p);
  for (auto _ : state) benchmark::DoNotOptimize(image(f, a, a));
}
BENCHMARK(BM_Image)->Args({101, 50})->Args({1009, 500})->Args({10007, 2000});

void BM_ProductSet(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  const auto a = generate(RandomFamily{static_cast<std::uint32_t>(state.range(1)), 3}, p);
  for (auto _ : state) benchmark::DoNotOptimize(productset(a, a));
}
BENCHMARK(BM_ProductSet)->Args({1009, 500})->Args({10007, 2000});

void BM_MultEnergy(benchmark::State& state) {
  const PrimeModulus p(10007);
  const auto a = generate(RandomFamily{static_cast<std::uint32_t>(state.range(0)), 11}, p);
  for (auto _ : state) benchmark::DoNotOptimize(mult_energy(a));
}
BENCHMARK(BM_MultEnergy)->Arg(100)->Arg(1000);

void BM_T1Check(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  const auto units = FpSet::multiplicative_group(p);
  const auto g = FuncTable::random(units, 1), h = FuncTable::random(units, 2);
  const auto a = generate(RandomFamily{static_cast<std::uint32_t>(state.range(0) / 2), 5}, p);
  for (auto _ : state) benchmark::DoNotOptimize(t1_check(a, a, a, g, h));
}
BENCHMARK(BM_T1Check)->Arg(13)->Arg(101)->Arg(1009);

void BM_GrowthChain(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  const auto a = generate(RandomFamily{static_cast<std::uint32_t>(state.range(1)), 5}, p);
  for (auto _ : state) benchmark::DoNotOptimize(growth_chain(a));
}
BENCHMARK(BM_GrowthChain)->Args({29, 10})->Args({1013, 40});

}  // namespace
