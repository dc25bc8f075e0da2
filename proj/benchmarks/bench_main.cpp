#include <benchmark/benchmark.h>

#include <random>

#include "rothlab/bohr.hpp"
#include "rothlab/correlation.hpp"
#include "rothlab/cyclic.hpp"
#include "rothlab/pipeline.hpp"
#include "rothlab/primes.hpp"

namespace {

using namespace rothlab;

CyclicFunction random_function(std::uint64_t modulus, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  CyclicFunction f = CyclicFunction::zeros(modulus);
  for (auto& v : f.values) v = d(rng);
  return f;
}

void BM_SievePrimes(benchmark::State& state) {
  const std::uint64_t limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(limit).count());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SievePrimes)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_DftChirp(benchmark::State& state) {
  const auto f = random_function(static_cast<std::uint64_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dft(f).values.size());
}
BENCHMARK(BM_DftChirp)->Arg(4093)->Arg(66683)->Unit(benchmark::kMillisecond);

void BM_DftDirect(benchmark::State& state) {
  const auto f = random_function(static_cast<std::uint64_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dft_direct(f).values.size());
}
BENCHMARK(BM_DftDirect)->Arg(1009)->Arg(4093)->Unit(benchmark::kMillisecond);

void BM_TripleSumDirect(benchmark::State& state) {
  const auto f = random_function(static_cast<std::uint64_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(triple_sum_direct(f, f, f));
}
BENCHMARK(BM_TripleSumDirect)->Arg(3343)->Arg(66683)->Unit(benchmark::kMillisecond);

void BM_BohrScan(benchmark::State& state) {
  Spectrum R;
  R.delta = 0.05;
  R.members = {1, 5, 17, 101};
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bohr_set(R, 0.05, n).members.size());
}
BENCHMARK(BM_BohrScan)->Arg(66683)->Unit(benchmark::kMillisecond);

void BM_Smooth(benchmark::State& state) {
  const std::uint64_t n = 66683;
  Spectrum R;
  R.delta = 0.05;
  R.members = {1};
  const SmoothingKernel k = make_kernel(bohr_set(R, 0.01, n));
  auto a = random_function(n, 3);
  for (auto& v : a.values) v = v < 0 ? -v : v;
  for (auto _ : state) benchmark::DoNotOptimize(smooth(a, k).values.size());
}
BENCHMARK(BM_Smooth)->Unit(benchmark::kMillisecond);

void BM_PipelineSmall(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.N = static_cast<std::uint64_t>(state.range(0));
  cfg.z_override = 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(cfg).overall.size());
}
BENCHMARK(BM_PipelineSmall)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
