#include <benchmark/benchmark.h>

#include "qcc/repcount.hpp"

namespace {

const char* kReps[][2] = {{"G2", "I4"}, {"Kronecker", "P2"}, {"Kronecker", "I3"}, {"Kronecker", "P3"}};

void BM_enumerate(benchmark::State& state) {
  const auto* r = kReps[state.range(0)];
  qcc::ValuedRep v = qcc::build_example_rep(r[0], r[1], static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qcc::enumerate_subreps(v, 1e9));
  state.SetLabel(std::string(r[0]) + " " + r[1]);
}

void BM_enumerate_reference(benchmark::State& state) {
  const auto* r = kReps[state.range(0)];
  qcc::ValuedRep v = qcc::build_example_rep(r[0], r[1], static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qcc::enumerate_subreps_reference(v, 1e9));
  state.SetLabel(std::string(r[0]) + " " + r[1]);
}

void args(benchmark::internal::Benchmark* b) {
  b->Args({0, 2})->Args({0, 3})->Args({1, 2})->Args({2, 2})->Args({3, 2});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_enumerate)->Apply(args);
BENCHMARK(BM_enumerate_reference)->Apply(args);
BENCHMARK_MAIN();
