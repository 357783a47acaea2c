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

#ifndef STEERQC_SWEEP_H
#define STEERQC_SWEEP_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steerqc/models.h"
#include "steerqc/pca.h"

namespace steerqc {

/// sigma_1 / sigma_2 over R batches of M trajectories.
struct PointStats {
    double sigma1_mean = 0;
    double sigma1_stderr = 0;
    double sigma2_mean = 0;
    double sigma2_stderr = 0;
    std::vector<double> sigma1_runs;
    std::vector<double> sigma2_runs;
};

/// Mean and standard error (sample std / sqrt(R)) of per-run sigmas.
PointStats stats_from_runs(std::vector<double> sigma1_runs, std::vector<double> sigma2_runs);

/// Seed of trajectory `sample` in batch `run` at the point described by spec.
/// Mixes the base seed with model kind, L and the probability bit patterns.
uint64_t trajectory_seed(uint64_t base_seed, const ModelSpec &spec, size_t run, size_t sample);

/// `samples` terminal bitstrings of batch `run`, parallel over trajectories.
/// threads <= 0 uses the OpenMP default. Row i is always trajectory i.
SampleMatrix sample_batch(const TrajectoryRunner &runner, uint64_t base_seed, size_t run, size_t samples, int threads = 0);

/// Single-threaded reference for sample_batch.
SampleMatrix sample_batch_serial(const TrajectoryRunner &runner, uint64_t base_seed, size_t run, size_t samples);

/// R batches of M trajectories, sigma_1 and sigma_2 per batch. The R*M
/// trajectories are scheduled dynamically across threads; results do not
/// depend on the thread count.
PointStats summarize_point(const ModelSpec &spec, size_t M, size_t R, uint64_t base_seed, int threads = 0);

/// Single-threaded reference for summarize_point.
PointStats summarize_point_serial(const ModelSpec &spec, size_t M, size_t R, uint64_t base_seed);

/// One line of a sweep table.
struct SweepRow {
    std::string model;
    size_t L = 0;
    /// The scanned control parameter.
    double p = 0;
    /// Both gauge-Higgs probabilities; empty for the other models.
    std::optional<double> p1;
    std::optional<double> p2;
    PointStats stats;
    size_t M = 0;
    size_t R = 0;
    size_t depth = 0;
};

struct SweepConfig;

/// Every (L, p) point of a configuration in (L, p) order. Throws
/// std::logic_error if two trajectories anywhere in the sweep share a seed.
/// `progress` is called after each finished point.
std::vector<SweepRow> run_sweep(const SweepConfig &config,
                                int threads = 0,
                                const std::function<void(const SweepRow &)> &progress = {});

}  // namespace steerqc

#endif
