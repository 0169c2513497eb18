#include <benchmark/benchmark.h>

#include "expanderlab/spgraph.hpp"

using namespace expanderlab;

namespace {

EdgeRule standard_rule(std::uint32_t pv) {
  return EdgeRule::standard(FuncTable::identity(FpSet::multiplicative_group(PrimeModulus(pv))));
}

void BM_BuildGraph(benchmark::State& state) {
  const auto rule = standard_rule(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SumProductGraph::build(rule));
}
BENCHMARK(BM_BuildGraph)->Arg(31)->Arg(61)->Arg(127);

void BM_Gram(benchmark::State& state) {
  const auto graph = SumProductGraph::build(standard_rule(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gram(graph));
  state.SetComplexityN(static_cast<std::int64_t>(graph.vertex_count()));
}
BENCHMARK(BM_Gram)->Arg(13)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_DecomposeGram(benchmark::State& state) {
  const auto gm = gram(SumProductGraph::build(standard_rule(static_cast<std::uint32_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_gram(gm));
}
BENCHMARK(BM_DecomposeGram)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_GramApply(benchmark::State& state) {
  const auto graph = SumProductGraph::build(standard_rule(static_cast<std::uint32_t>(state.range(0))));
  std::vector<double> x(graph.vertex_count(), 1.0), y(graph.vertex_count());
  for (auto _ : state) {
    gram_apply(graph, x, y);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_GramApply)->Arg(31)->Arg(61)->Arg(127);

}  // namespace
