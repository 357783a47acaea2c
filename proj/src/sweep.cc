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

#include "steerqc/sweep.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

#include "steerqc/config.h"

namespace steerqc {

namespace {

int resolve_threads(int threads) {
    return threads > 0 ? threads : omp_get_max_threads();
}

std::pair<double, double> leading_sigmas(const SampleMatrix &x) {
    PcaSummary s = pca(x, 2);
    return {s.sigmas[0], s.sigmas[1]};
}

}  // namespace

PointStats stats_from_runs(std::vector<double> sigma1_runs, std::vector<double> sigma2_runs) {
    auto mean_stderr = [](const std::vector<double> &v) -> std::pair<double, double> {
        double n = (double)v.size();
        double mean = 0;
        for (double x : v) {
            mean += x / n;
        }
        if (v.size() < 2) {
            return {mean, 0.0};
        }
        double ss = 0;
        for (double x : v) {
            ss += (x - mean) * (x - mean);
        }
        return {mean, std::sqrt(ss / (n - 1)) / std::sqrt(n)};
    };
    PointStats out;
    std::tie(out.sigma1_mean, out.sigma1_stderr) = mean_stderr(sigma1_runs);
    std::tie(out.sigma2_mean, out.sigma2_stderr) = mean_stderr(sigma2_runs);
    out.sigma1_runs = std::move(sigma1_runs);
    out.sigma2_runs = std::move(sigma2_runs);
    return out;
}

uint64_t trajectory_seed(uint64_t base_seed, const ModelSpec &spec, size_t run, size_t sample) {
    return hash_words({base_seed,
                       (uint64_t)spec.kind,
                       (uint64_t)spec.L,
                       std::bit_cast<uint64_t>(spec.p),
                       std::bit_cast<uint64_t>(spec.p1),
                       std::bit_cast<uint64_t>(spec.p2),
                       (uint64_t)run,
                       (uint64_t)sample});
}

SampleMatrix sample_batch(const TrajectoryRunner &runner, uint64_t base_seed, size_t run, size_t samples, int threads) {
    SampleMatrix x(samples, runner.terminal_ops().size());
    const ModelSpec &spec = runner.spec();
#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve_threads(threads))
    for (long i = 0; i < (long)samples; i++) {
        TrajectoryResult r = runner.run(trajectory_seed(base_seed, spec, run, (size_t)i));
        x.set_row((size_t)i, r.outcomes);
    }
    return x;
}

SampleMatrix sample_batch_serial(const TrajectoryRunner &runner, uint64_t base_seed, size_t run, size_t samples) {
    SampleMatrix x(samples, runner.terminal_ops().size());
    for (size_t i = 0; i < samples; i++) {
        TrajectoryResult r = runner.run(trajectory_seed(base_seed, runner.spec(), run, i));
        x.set_row(i, r.outcomes);
    }
    return x;
}

PointStats summarize_point(const ModelSpec &spec, size_t M, size_t R, uint64_t base_seed, int threads) {
    if (M < 2 || R < 1) {
        throw std::invalid_argument("summarize_point needs M >= 2 and R >= 1");
    }
    TrajectoryRunner runner(spec);
    const size_t features = runner.terminal_ops().size();
    std::vector<SampleMatrix> batches(R, SampleMatrix(M, features));
    const int nt = resolve_threads(threads);

#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
    for (long job = 0; job < (long)(R * M); job++) {
        size_t run = (size_t)job / M;
        size_t sample = (size_t)job % M;
        TrajectoryResult r = runner.run(trajectory_seed(base_seed, spec, run, sample));
        batches[run].set_row(sample, r.outcomes);
    }

    std::vector<double> s1(R), s2(R);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long run = 0; run < (long)R; run++) {
        std::tie(s1[(size_t)run], s2[(size_t)run]) = leading_sigmas(batches[(size_t)run]);
    }
    return stats_from_runs(std::move(s1), std::move(s2));
}

PointStats summarize_point_serial(const ModelSpec &spec, size_t M, size_t R, uint64_t base_seed) {
    if (M < 2 || R < 1) {
        throw std::invalid_argument("summarize_point needs M >= 2 and R >= 1");
    }
    TrajectoryRunner runner(spec);
    std::vector<double> s1, s2;
    for (size_t run = 0; run < R; run++) {
        auto [a, b] = leading_sigmas(sample_batch_serial(runner, base_seed, run, M));
        s1.push_back(a);
        s2.push_back(b);
    }
    return stats_from_runs(std::move(s1), std::move(s2));
}

std::vector<SweepRow> run_sweep(const SweepConfig &config, int threads, const std::function<void(const SweepRow &)> &progress) {
    config.validate();
    std::unordered_set<uint64_t> seeds;
    std::vector<SweepRow> rows;
    for (size_t L : config.sizes) {
        for (double value : config.grid) {
            ModelSpec spec = config.spec_at(L, value);
            for (size_t run = 0; run < config.R; run++) {
                for (size_t sample = 0; sample < config.M; sample++) {
                    if (!seeds.insert(trajectory_seed(config.base_seed, spec, run, sample)).second) {
                        throw std::logic_error("trajectory seed collision at L=" + std::to_string(L) +
                                               " p=" + std::to_string(value));
                    }
                }
            }
            SweepRow row;
            row.model = std::string(to_string(spec.kind));
            row.L = L;
            row.p = value;
            if (spec.kind == ModelKind::kGaugeHiggs) {
                row.p1 = spec.p1;
                row.p2 = spec.p2;
            }
            row.stats = summarize_point(spec, config.M, config.R, config.base_seed, threads);
            row.M = config.M;
            row.R = config.R;
            row.depth = spec.depth_events;
            rows.push_back(row);
            if (progress) {
                progress(rows.back());
            }
        }
    }
    return rows;
}

}  // namespace steerqc
