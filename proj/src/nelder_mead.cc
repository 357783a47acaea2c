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

#include "steerqc/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace steerqc {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &objective,
                             std::vector<double> start,
                             std::span<const double> steps,
                             const NelderMeadOptions &opt) {
    const size_t dim = start.size();
    if (dim == 0 || steps.size() != dim) {
        throw std::invalid_argument("nelder_mead needs one step per coordinate");
    }

    size_t evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        evaluations++;
        double v = objective(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    std::vector<std::vector<double>> vertex(dim + 1, start);
    std::vector<double> value(dim + 1);
    for (size_t i = 0; i < dim; i++) {
        vertex[i + 1][i] += steps[i];
    }
    for (size_t k = 0; k <= dim; k++) {
        value[k] = eval(vertex[k]);
    }

    std::vector<size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto point_along = [&](double t, std::vector<double> &out, const std::vector<double> &worst) {
        for (size_t i = 0; i < dim; i++) {
            out[i] = centroid[i] + t * (centroid[i] - worst[i]);
        }
    };

    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return value[a] < value[b]; });
        const size_t best = order.front();
        const size_t worst = order.back();
        const size_t second_worst = order[dim - 1];

        double spread = 0;
        for (size_t k = 0; k <= dim; k++) {
            for (size_t i = 0; i < dim; i++) {
                spread = std::max(spread, std::abs(vertex[k][i] - vertex[best][i]));
            }
        }
        if (spread < opt.x_tolerance) {
            converged = true;
            break;
        }
        if (evaluations >= opt.max_evaluations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t k : order) {
            if (k == worst) {
                continue;
            }
            for (size_t i = 0; i < dim; i++) {
                centroid[i] += vertex[k][i] / (double)dim;
            }
        }

        point_along(opt.reflection, trial, vertex[worst]);
        double reflected = eval(trial);
        if (reflected < value[best]) {
            point_along(opt.reflection * opt.expansion, trial2, vertex[worst]);
            double expanded = eval(trial2);
            if (expanded < reflected) {
                vertex[worst] = trial2;
                value[worst] = expanded;
            } else {
                vertex[worst] = trial;
                value[worst] = reflected;
            }
            continue;
        }
        if (reflected < value[second_worst]) {
            vertex[worst] = trial;
            value[worst] = reflected;
            continue;
        }

        // Outside contraction when the reflection beat the worst vertex,
        // inside contraction otherwise.
        bool outside = reflected < value[worst];
        point_along(outside ? opt.reflection * opt.contraction : -opt.contraction, trial2, vertex[worst]);
        double contracted = eval(trial2);
        if (contracted < (outside ? reflected : value[worst])) {
            vertex[worst] = trial2;
            value[worst] = contracted;
            continue;
        }

        for (size_t k = 0; k <= dim; k++) {
            if (k == best) {
                continue;
            }
            for (size_t i = 0; i < dim; i++) {
                vertex[k][i] = vertex[best][i] + opt.shrinkage * (vertex[k][i] - vertex[best][i]);
            }
            value[k] = eval(vertex[k]);
        }
    }

    size_t best = (size_t)(std::min_element(value.begin(), value.end()) - value.begin());
    return {vertex[best], value[best], evaluations, converged};
}

}  // namespace steerqc
