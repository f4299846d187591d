// Serial reference vs OpenMP drivers for delay sweeps and batch solves.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "eqrisk/analysis.hpp"
#include "eqrisk/pricing.hpp"

namespace {

eqrisk::ProblemInstance make_instance(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> logu(std::log(0.1), std::log(10.0));
  eqrisk::InstanceData data;
  double planned = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    eqrisk::Project p{"p" + std::to_string(i), std::exp(logu(rng)), std::exp(logu(rng)),
                      std::exp(logu(rng)), std::exp(logu(rng))};
    planned += p.volume * p.base_cost;
    data.projects.push_back(p);
  }
  data.budget = 0.3 * planned;
  return eqrisk::validate_instance(std::move(data));
}

std::vector<double> grid(std::size_t count) {
  std::vector<double> ts(count);
  for (std::size_t i = 0; i < count; ++i) ts[i] = 0.01 * static_cast<double>(i);
  return ts;
}

void BM_SweepSerial(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto inst = make_instance(rng, static_cast<std::size_t>(state.range(1)));
  const auto ts = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqrisk::sweep_delay_serial(inst, ts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto inst = make_instance(rng, static_cast<std::size_t>(state.range(1)));
  const auto ts = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqrisk::sweep_delay(inst, ts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<eqrisk::ProblemInstance> batch(std::size_t count, std::size_t n) {
  std::mt19937_64 rng(2);
  std::vector<eqrisk::ProblemInstance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_instance(rng, n));
  return out;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto b = batch(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(eqrisk::solve_batch_serial(b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto b = batch(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(eqrisk::solve_batch(b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SingleSolve(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto inst = make_instance(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqrisk::solve_equal_risk(inst));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Args({1000, 3})->Args({1000, 100})->Args({10000, 10});
BENCHMARK(BM_SweepParallel)->Args({1000, 3})->Args({1000, 100})->Args({10000, 10});
BENCHMARK(BM_BatchSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_BatchParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SingleSolve)->Arg(3)->Arg(10)->Arg(1000);

BENCHMARK_MAIN();
