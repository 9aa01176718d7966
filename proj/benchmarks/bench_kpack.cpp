#include <benchmark/benchmark.h>

#include "kpack/cycle_packing.hpp"
#include "kpack/matching.hpp"
#include "kpack/oracle.hpp"
#include "kpack/path_packing.hpp"
#include "kpack/tsp.hpp"

using namespace kpack;

namespace {

WeightedCompleteGraph instance(int n, WeightClass cls) {
  InstanceSpec spec;
  spec.n = n;
  spec.weight_class = cls;
  spec.distribution = cls == WeightClass::metric ? Distribution::euclidean : Distribution::uniform;
  spec.seed = 17;
  return generate_instance(spec);
}

void BM_PerfectMatching(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::general);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_perfect_matching(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PerfectMatching)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_SizedMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = instance(n, WeightClass::general);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_matching_of_size(g, n / 5));
}
BENCHMARK(BM_SizedMatching)->RangeMultiplier(2)->Range(20, 160);

void BM_ExactTsp(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  for (auto _ : state) benchmark::DoNotOptimize(exact_max_tsp(g));
}
BENCHMARK(BM_ExactTsp)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_GreedyTsp(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_max_tsp(g));
}
BENCHMARK(BM_GreedyTsp)->RangeMultiplier(4)->Range(16, 1024);

void BM_Oracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_k_packing(g, k, PackingKind::cycle));
}
BENCHMARK(BM_Oracle)->Args({12, 3})->Args({12, 4})->Args({16, 4})->Args({15, 5})->Unit(benchmark::kMillisecond);

void BM_Alg3(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  for (auto _ : state) benchmark::DoNotOptimize(alg3_matching_kcp_odd(g, 5));
}
BENCHMARK(BM_Alg3)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_Alg6(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::general);
  for (auto _ : state) benchmark::DoNotOptimize(alg6_general_4cp(g));
}
BENCHMARK(BM_Alg6)->RangeMultiplier(2)->Range(16, 128);

void BM_Alg7(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  for (auto _ : state) benchmark::DoNotOptimize(alg7_metric_4cp(g));
}
BENCHMARK(BM_Alg7)->RangeMultiplier(2)->Range(16, 128);

void BM_Alg8(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  for (auto _ : state) benchmark::DoNotOptimize(alg8_metric_4pp(g));
}
BENCHMARK(BM_Alg8)->RangeMultiplier(2)->Range(16, 128);

void BM_Alg1Greedy(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)), WeightClass::metric);
  const auto tsp = make_tsp_solver(TspSolverKind::greedy);
  for (auto _ : state) benchmark::DoNotOptimize(alg1_metric_kcp(g, 4, tsp));
}
BENCHMARK(BM_Alg1Greedy)->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
