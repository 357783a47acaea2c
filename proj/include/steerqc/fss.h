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

#ifndef STEERQC_FSS_H
#define STEERQC_FSS_H

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "steerqc/nelder_mead.h"

namespace steerqc {

/// One (p, L, sigma2) measurement.
struct ScanPoint {
    double p = 0;
    size_t L = 0;
    double sigma2 = 0;
    double std_error = 0;
};

struct ScalingParams {
    double p_c = 0.5;
    double nu = 1.3;
    double alpha = 0.5;
};

/// x = (p - p_c) L^(1/nu), y = sigma2 L^(-alpha). Throws NumericError on a
/// non-finite result and std::invalid_argument for L = 0 or nu = 0.
std::pair<double, double> rescale(const ScanPoint &point, const ScalingParams &params);

/// kAbsolute: the mean squared residual itself. kRelative: divided by the
/// variance of y, which removes the trivial minimum y -> 0 as alpha grows;
/// at fixed alpha the two differ by a constant factor. kChiSquare: weighted
/// least squares with residuals in units of each point's rescaled standard
/// error (zero errors are raised to the smallest positive one, or to 1 if
/// none is positive).
enum class ResidueScale { kAbsolute, kRelative, kChiSquare };

/// Mean squared residual of the least-squares degree-`degree` polynomial fit
/// of y against x over the rescaled points. The fit uses Legendre polynomials
/// in x mapped onto [-1, 1]. Needs at least degree + 2 points; throws
/// NumericError when the design is rank deficient.
double residue(std::span<const ScanPoint> points,
               const ScalingParams &params,
               int degree = 12,
               ResidueScale scale = ResidueScale::kAbsolute);

/// True when the rescaled x ranges of all sizes share a common interval.
bool sizes_overlap(std::span<const ScanPoint> points, const ScalingParams &params);

struct ContourOptions {
    double threshold = 1.05;
    /// Grid nodes per axis (odd, so the optimum is a node).
    size_t grid_points = 41;
    double p_c_halfwidth = 0.02;
    double nu_halfwidth = 0.3;
    /// Grid widen/narrow rounds before an open contour is reported.
    size_t max_rounds = 10;
};

/// Extent of {eps <= threshold * eps_min} around (p_c, nu).
struct ContourBox {
    double p_c_lo = 0, p_c_hi = 0;
    double nu_lo = 0, nu_hi = 0;
    bool closed = false;

    double p_c_err() const {
        return 0.5 * (p_c_hi - p_c_lo);
    }
    double nu_err() const {
        return 0.5 * (nu_hi - nu_lo);
    }
};

/// Bounding box of the sub-threshold region of a two-parameter landscape,
/// scanned on a grid centred on the optimum. Boundary crossings are located
/// by linear interpolation along grid lines. The grid is widened per axis
/// while the region touches its edge and narrowed while the region spans
/// fewer than four cells; `closed` is false if the region still touches the
/// edge after max_rounds.
ContourBox contour_box(const std::function<double(double, double)> &eps,
                       double p_c,
                       double nu,
                       double eps_min,
                       const ContourOptions &options = {});

struct CollapseOptions {
    int degree = 12;
    ResidueScale scale = ResidueScale::kChiSquare;
    /// Reject parameters whose rescaled sizes do not overlap (nu -> 0 fits
    /// each size separately).
    bool require_overlap = true;
    /// sigma2 never exceeds the trace N ~ L, so alpha above 1 is unphysical.
    double alpha_min = -1.0;
    double alpha_max = 1.0;
    NelderMeadOptions simplex;
    ScalingParams steps{0.02, 0.2, 0.1};
    ContourOptions contour;
};

struct CollapseResult {
    double p_c = 0;
    double nu = 0;
    double alpha = 0;
    double eps_min = 0;
    double p_c_err = 0;
    double nu_err = 0;
    int degree = 12;
    ResidueScale scale = ResidueScale::kChiSquare;
    bool converged = false;
    /// False when the uncertainty contour could not be closed.
    bool errors_closed = false;
    size_t evaluations = 0;
};

/// Nelder-Mead minimization of residue() over (p_c, nu, alpha) followed by
/// uncertainty_scan(). The simplex is restarted once from its optimum.
/// Requires at least 3 distinct sizes and 5 distinct p values.
CollapseResult collapse(std::span<const ScanPoint> points,
                        const ScalingParams &guess,
                        const CollapseOptions &options = {});

/// Half-widths of the 1.05 eps_min box in (p_c, nu) at alpha fixed to
/// best.alpha. Uses best.eps_min as the reference level.
ContourBox uncertainty_scan(std::span<const ScanPoint> points,
                            const CollapseResult &best,
                            const ContourOptions &options = {});

/// Points with L >= min_L.
std::vector<ScanPoint> filter_min_size(std::span<const ScanPoint> points, size_t min_L);

struct MasterPoint {
    size_t L;
    double p;
    double x;
    double y;
};

std::vector<MasterPoint> master_curve(std::span<const ScanPoint> points, const ScalingParams &params);

}  // namespace steerqc

#endif
