#include "gft/analytic_verify.hpp"
#include "gft/theorems.hpp"
#include "gft/threshold_solver.hpp"

#include <benchmark/benchmark.h>

using namespace gft;

static void BM_CoeffsF(benchmark::State& state) {
  const PoissonParams p(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeffs_F(p));
  }
}
BENCHMARK(BM_CoeffsF)->Arg(1)->Arg(10)->Arg(100);

static void BM_Crosscheck(benchmark::State& state) {
  const PoissonParams p(2.5);
  const ClassParams c(0.6, 0.3);
  const RParams r(0.9, -0.5, {0.3, 1.1});
  const auto pid = static_cast<PredicateId>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crosscheck(pid, p, c, r));
  }
}
BENCHMARK(BM_Crosscheck)->DenseRange(0, 5);

static void BM_SolveThresholdT1(benchmark::State& state) {
  const ClassParams c(1.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_m_star(PredicateId::T1_F_in_S, c, std::nullopt, 1e-10));
  }
}
BENCHMARK(BM_SolveThresholdT1);

static void BM_GridCheck(benchmark::State& state) {
  const auto f = coeffs_F(PoissonParams(0.4));
  const ClassParams c(1.0, 0.0);
  GridSpec grid;
  grid.points_per_circle = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_check(f, ConditionId::S_cond, c, grid));
  }
}
BENCHMARK(BM_GridCheck)->Arg(64)->Arg(256)->Arg(1024);

static void BM_WitnessSearch(benchmark::State& state) {
  const auto f = coeffs_F(PoissonParams(1.0));
  const ClassParams c(1.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_search(f, ConditionId::S_cond, c));
  }
}
BENCHMARK(BM_WitnessSearch);

BENCHMARK_MAIN();
