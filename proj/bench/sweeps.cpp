// Serial reference (jobs = 1) against the OpenMP sweep on the same cases.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>

#include "superkl/suites.hpp"

using namespace superkl;

namespace {

SuiteOptions options(int jobs) {
  SuiteOptions o;
  o.jobs = jobs;
  o.range = 4;
  o.max_prefix = 4;
  o.structure_cases = 2000;
  return o;
}

void run(benchmark::State& state, SuiteReport (*suite)(const SuiteOptions&)) {
  const int jobs = static_cast<int>(state.range(0));
  long cases = 0;
  for (auto _ : state) {
    SuiteReport r = suite(options(jobs));
    if (!r.ok()) state.SkipWithError("suite reported failures");
    cases = r.cases;
    benchmark::DoNotOptimize(r.failed);
  }
  state.counters["cases"] = static_cast<double>(cases);
  state.counters["jobs"] = jobs;
}

void BM_Duality(benchmark::State& s) { run(s, suite_duality); }
void BM_Oracle(benchmark::State& s) { run(s, suite_oracle); }
void BM_Structure(benchmark::State& s) { run(s, suite_structure); }

void jobs_args(benchmark::internal::Benchmark* b) {
  b->Arg(1);
  b->Arg(std::max(2, omp_get_num_procs()));
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Duality)->Apply(jobs_args);
BENCHMARK(BM_Oracle)->Apply(jobs_args);
BENCHMARK(BM_Structure)->Apply(jobs_args);

BENCHMARK_MAIN();
