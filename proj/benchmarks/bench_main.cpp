#include <benchmark/benchmark.h>

#include <vector>

#include "hahn/differential.hpp"
#include "hahn/instances.hpp"
#include "hahn/pseudo_direct.hpp"
#include "hahn/sampling.hpp"

namespace {

using namespace hahn;

Series random_series(Sampler& rng, const SeriesSpace& space, std::int64_t terms,
                     std::function<bool(const GroupElement&)> allowed = nullptr) {
  Sampler::Shape shape;
  shape.lo = -4 * terms;
  shape.hi = 4 * terms;
  shape.min_terms = static_cast<std::size_t>(terms);
  shape.max_terms = static_cast<std::size_t>(terms);
  shape.allowed = std::move(allowed);
  return rng.series(space, shape);
}

void BM_SeriesMul(benchmark::State& state) {
  const SeriesSpace space;
  Sampler rng{1};
  const Series a = random_series(rng, space, state.range(0));
  const Series b = random_series(rng, space, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_IntegrateEuler(benchmark::State& state) {
  const SeriesSpace space;
  const DifferentialFieldSpec euler{TermwiseDerivation::euler(space)};
  Sampler rng{2};
  const Series b = random_series(rng, space, state.range(0), [](const GroupElement& g) { return !g.is_zero(); });
  for (auto _ : state) benchmark::DoNotOptimize(integrate(euler, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntegrateEuler)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_DecomposeParity(benchmark::State& state) {
  const SeriesSpace f5{CoefficientField::prime(5), ValueGroup::integers()};
  const std::vector<Subgroup> parity{Subgroup::even(), Subgroup::odd()};
  Sampler rng{3};
  const Series a = random_series(rng, f5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(parity, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecomposeParity)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_CheckInstance(benchmark::State& state) {
  CheckOptions options;
  options.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_instance_checks("euler", SeriesSpace{}, options));
}
BENCHMARK(BM_CheckInstance)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
