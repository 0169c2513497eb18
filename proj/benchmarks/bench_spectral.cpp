#include <benchmark/benchmark.h>

#include "expanderlab/spectral.hpp"

using namespace expanderlab;

namespace {

SumProductGraph standard_graph(std::int64_t pv) {
  return SumProductGraph::build(EdgeRule::standard(
      FuncTable::identity(FpSet::multiplicative_group(PrimeModulus(static_cast<std::uint64_t>(pv))))));
}

void BM_Jacobi(benchmark::State& state) {
  const auto gm = gram(standard_graph(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(gm));
}
BENCHMARK(BM_Jacobi)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_DeflatedPower(benchmark::State& state) {
  const auto graph = standard_graph(state.range(0));
  SpectralOptions opts;
  opts.method = EigenMethod::deflated_power;
  for (auto _ : state) benchmark::DoNotOptimize(eigs_top2(graph, opts));
}
BENCHMARK(BM_DeflatedPower)->Arg(13)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_Discrepancy(benchmark::State& state) {
  const auto graph = standard_graph(state.range(0));
  const auto rep = eigs_top2(graph);
  const std::size_t n = graph.vertex_count();
  VertexSet s(n), t(n);
  for (std::size_t v = 0; v < n; v += 2) s.insert(v);
  for (std::size_t v = 0; v < n; v += 3) t.insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(discrepancy_check(graph, s, t, rep));
}
BENCHMARK(BM_Discrepancy)->Arg(31)->Arg(61);

}  // namespace
