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

#ifndef STEERQC_NELDER_MEAD_H
#define STEERQC_NELDER_MEAD_H

#include <functional>
#include <span>
#include <vector>

namespace steerqc {

struct NelderMeadOptions {
    /// Converged once every vertex is within this distance of the best vertex
    /// in every coordinate.
    double x_tolerance = 1e-6;
    size_t max_evaluations = 10000;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrinkage = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    size_t evaluations = 0;
    bool converged = false;
};

/// Downhill simplex minimization. The initial simplex is `start` plus one
/// vertex per coordinate displaced by steps[i]. Non-finite objective values
/// are treated as +infinity.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &objective,
                             std::vector<double> start,
                             std::span<const double> steps,
                             const NelderMeadOptions &options = {});

}  // namespace steerqc

#endif
