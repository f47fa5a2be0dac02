#include <benchmark/benchmark.h>

#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/generators.hpp"
#include "cocycle_forge/oracle.hpp"
#include "cocycle_forge/semilinear.hpp"

using namespace cocycle_forge;

namespace {

SemilinearMap z9_r() { return naturals_r(make_cyclic(9), {0, 1, 2, 3, 4, 1, 2, 3, 3}); }

void BM_ValidateCocycle(benchmark::State& state) {
  const Cocycle f = cocycle_from_r(z9_r());
  for (auto _ : state) benchmark::DoNotOptimize(validate_cocycle(f.table()));
}
BENCHMARK(BM_ValidateCocycle);

void BM_Context(benchmark::State& state) {
  const Cocycle f = cocycle_from_r(z9_r());
  for (auto _ : state) benchmark::DoNotOptimize(AlgebraContext::make(f));
}
BENCHMARK(BM_Context);

void BM_Generators(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(cocycle_from_r(z9_r()));
  for (auto _ : state) benchmark::DoNotOptimize(all_generators(ctx));
}
BENCHMARK(BM_Generators);

void BM_DecomposeByClasses(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(cocycle_from_r(z9_r()));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_by_classes(ctx));
}
BENCHMARK(BM_DecomposeByClasses);

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(cocycle_from_r(z9_r()));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(ctx));
}
BENCHMARK(BM_EnumerateIdeals);

void BM_CyclicCensus(benchmark::State& state) {
  CensusConfig cfg;
  cfg.group = make_cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cocycles(cfg));
}
BENCHMARK(BM_CyclicCensus)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_D3Census(benchmark::State& state) {
  CensusConfig cfg;
  cfg.group = make_dihedral(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cocycles(cfg));
}
BENCHMARK(BM_D3Census)->Unit(benchmark::kMillisecond);

void BM_SearchRealization(benchmark::State& state) {
  const auto ctx = AlgebraContext::make(cocycle_from_r(z9_r()));
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_realization(ctx, bound));
}
BENCHMARK(BM_SearchRealization)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PaddedLift(benchmark::State& state) {
  const auto r = z9_r();
  const auto ctx = AlgebraContext::make(cocycle_from_r(r));
  const DescendingChain chain({MonomialIdeal::from_members(ctx, {3, 4, 8}), MonomialIdeal::from_members(ctx, {4})});
  for (auto _ : state) benchmark::DoNotOptimize(padded_lift(r, chain));
}
BENCHMARK(BM_PaddedLift);

}  // namespace

// The distribution's libbenchmark_main.a is LTO bytecode from another compiler release.
BENCHMARK_MAIN();
