#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "moser/inequalities.hpp"
#include "moser/optimizer.hpp"
#include "moser/rearrangement.hpp"
#include "moser/sequences.hpp"

namespace {

using namespace moser;

void BM_TmFunctionalMoser(benchmark::State& state) {
  const RadialProfile p = moser::moser(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tm_functional(p, four_pi).j_beta);
}
BENCHMARK(BM_TmFunctionalMoser)->Arg(10)->Arg(10000)->Arg(1000000);

void BM_TmFunctionalKnots(benchmark::State& state) {
  std::vector<Knot> knots{Knot{0.0, 0.0}};
  for (int i = 1; i < state.range(0); ++i) knots.push_back(Knot{0.5 * i, 0.02 * i});
  const RadialProfile p(1.0, std::move(knots));
  const RadialProfile q = scale_amplitude(p, 1.0 / std::sqrt(dirichlet_norm_sq(p)));
  for (auto _ : state) benchmark::DoNotOptimize(tm_functional(q, four_pi, 1e-8).j_beta);
}
BENCHMARK(BM_TmFunctionalKnots)->Arg(8)->Arg(32)->Arg(128);

void BM_ZygmundQuasinorm(benchmark::State& state) {
  const RadialProfile p = zygmund_optimal(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zygmund_quasinorm(p).value);
}
BENCHMARK(BM_ZygmundQuasinorm)->Arg(4)->Arg(10000);

void BM_Rearrangement(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> value(0.0, 5.0);
  WeightedSamples w;
  for (int i = 0; i < state.range(0); ++i) {
    w.values.push_back(value(rng));
    w.areas.push_back(1.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(decreasing_rearrangement(w).knots().size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rearrangement)->RangeMultiplier(8)->Range(64, 262144)->Complexity();

void BM_Optimizer(benchmark::State& state) {
  OptimizationOptions opt;
  opt.budget = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maximize(ConstraintSet::ruf(1.0), four_pi, opt).best_value);
}
BENCHMARK(BM_Optimizer)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
