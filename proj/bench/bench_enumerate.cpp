// Compares the canonical-augmentation engine against the brute-force
// reference, and measures the OpenMP frontier split at several worker
// counts. Counts are reported as counters so a regression in either
// engine is visible next to its timing.

#include <benchmark/benchmark.h>

#include <orthoposet/enumerate.hpp>

using namespace orthoposet;

namespace {

EnumJob job_for(int max_n, int jobs) {
  EnumJob job;
  job.max_n = max_n;
  job.jobs = jobs;
  job.store_representatives = false;
  return job;
}

void bm_canonical(benchmark::State& state) {
  EnumJob job = job_for(static_cast<int>(state.range(0)), 1);
  long long total = 0;
  for (auto _ : state) {
    EnumResult r = enumerate(job);
    total = r.total();
    benchmark::DoNotOptimize(total);
  }
  state.counters["structures"] = static_cast<double>(total);
}

void bm_naive(benchmark::State& state) {
  EnumJob job = job_for(static_cast<int>(state.range(0)), 1);
  long long total = 0;
  for (auto _ : state) {
    EnumResult r = naive_enumerate(job);
    total = r.total();
    benchmark::DoNotOptimize(total);
  }
  state.counters["structures"] = static_cast<double>(total);
}

void bm_minimality_jobs(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  long long total = 0;
  for (auto _ : state) {
    EnumResult r = verify_minimality(12, jobs);
    total = r.total();
    benchmark::DoNotOptimize(total);
  }
  state.counters["structures"] = static_cast<double>(total);
}

}  // namespace

BENCHMARK(bm_canonical)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_naive)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_minimality_jobs)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
