// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "dimsat/bench.hpp"
#include "dimsat/generator.hpp"
#include "dimsat/oracle.hpp"
#include "dimsat/solver.hpp"

using namespace dimsat;

namespace {

Formula instance(Var n, double ratio, std::uint64_t seed) {
  GenSpec g;
  g.num_vars = n;
  g.num_clauses = clauses_for_ratio(n, ratio);
  g.seed = seed;
  return gen_random_ksat(g);
}

// Ratio 6 is almost always UNSAT, so the whole space is scanned.
void BM_oracle_serial(benchmark::State& state) {
  const Formula f = instance(static_cast<Var>(state.range(0)), 6.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve_serial(f));
}
void BM_oracle_parallel(benchmark::State& state) {
  const Formula f = instance(static_cast<Var>(state.range(0)), 6.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(f));
}

void BM_count_serial(benchmark::State& state) {
  const Formula f = instance(static_cast<Var>(state.range(0)), 3.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_models_serial(f));
}
void BM_count_parallel(benchmark::State& state) {
  const Formula f = instance(static_cast<Var>(state.range(0)), 3.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_models(f));
}

SolverConfig portfolio_config() {
  SolverConfig c;
  c.mode = DescentMode::sideways;
  c.initial_polarity = InitialPolarity::random;
  c.endgame_threshold = 0;
  c.max_iters = 2000;
  return c;
}

void BM_portfolio_serial(benchmark::State& state) {
  const Formula f = instance(150, 4.26, 3);
  const auto cfg = portfolio_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_portfolio_serial(f, cfg, static_cast<std::size_t>(state.range(0))));
}
void BM_portfolio_parallel(benchmark::State& state) {
  const Formula f = instance(150, 4.26, 3);
  const auto cfg = portfolio_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_portfolio(f, cfg, static_cast<std::size_t>(state.range(0))));
}

BenchPlan ensemble_plan() {
  BenchPlan plan;
  const std::vector<double> ratios{3.0, 4.26, 5.5};
  plan.instances = ratio_ensemble(20, 3, ratios, 8, 1);
  plan.configs = {{"restart", SolverConfig{}}};
  plan.deterministic = true;
  return plan;
}

void BM_bench_serial(benchmark::State& state) {
  const auto plan = ensemble_plan();
  for (auto _ : state) benchmark::DoNotOptimize(run_bench_serial(plan));
}
void BM_bench_parallel(benchmark::State& state) {
  const auto plan = ensemble_plan();
  for (auto _ : state) benchmark::DoNotOptimize(run_bench(plan));
}

}  // namespace

BENCHMARK(BM_oracle_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_portfolio_serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_portfolio_parallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bench_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bench_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
