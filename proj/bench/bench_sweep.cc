// Copyright 2026 The steerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "steerqc/models.h"
#include "steerqc/sweep.h"

using namespace steerqc;

static void BM_ptf_trajectory(benchmark::State &state) {
    ModelSpec spec = ModelSpec::ptf_ising((size_t)state.range(0), 0.5);
    TrajectoryRunner runner(spec);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(runner.run(seed++));
    }
    state.counters["events"] = (double)spec.depth_events;
}
BENCHMARK(BM_ptf_trajectory)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_xzzx_trajectory(benchmark::State &state) {
    ModelSpec spec = ModelSpec::xzzx((size_t)state.range(0), 0.5, ErrorKind::kBoth, true);
    TrajectoryRunner runner(spec);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(runner.run(seed++));
    }
}
BENCHMARK(BM_xzzx_trajectory)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_point_serial(benchmark::State &state) {
    ModelSpec spec = ModelSpec::ptf_ising(32, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(summarize_point_serial(spec, 200, 2, 1));
    }
}
BENCHMARK(BM_point_serial)->Unit(benchmark::kMillisecond);

static void BM_point_parallel(benchmark::State &state) {
    ModelSpec spec = ModelSpec::ptf_ising(32, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(summarize_point(spec, 200, 2, 1, (int)state.range(0)));
    }
}
BENCHMARK(BM_point_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
