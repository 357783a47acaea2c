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

#include "steerqc/fss.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "steerqc/errors.h"

namespace steerqc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::pair<double, double> rescale(const ScanPoint &point, const ScalingParams &params) {
    if (point.L == 0) {
        throw std::invalid_argument("rescale needs L > 0");
    }
    if (params.nu == 0) {
        throw std::invalid_argument("rescale needs nu != 0");
    }
    double size = (double)point.L;
    double x = (point.p - params.p_c) * std::pow(size, 1.0 / params.nu);
    double y = point.sigma2 * std::pow(size, -params.alpha);
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw NumericError("rescaled point is not finite");
    }
    return {x, y};
}

double residue(std::span<const ScanPoint> points, const ScalingParams &params, int degree, ResidueScale scale) {
    if (degree < 0) {
        throw std::invalid_argument("polynomial degree must be non-negative");
    }
    const size_t k = points.size();
    const size_t terms = (size_t)degree + 1;
    if (k < terms + 1) {
        throw std::invalid_argument("a degree-" + std::to_string(degree) + " collapse needs at least " +
                                    std::to_string(terms + 1) + " points, got " + std::to_string(k));
    }

    Eigen::VectorXd x(k), y(k);
    for (size_t i = 0; i < k; i++) {
        auto [xi, yi] = rescale(points[i], params);
        x((Eigen::Index)i) = xi;
        y((Eigen::Index)i) = yi;
    }
    double lo = x.minCoeff();
    double hi = x.maxCoeff();
    if (!(hi - lo > 1e-12 * std::max(1.0, std::abs(hi)))) {
        throw NumericError("rescaled x values coincide; the fit is rank deficient");
    }
    Eigen::VectorXd t = ((2.0 * x.array() - (hi + lo)) / (hi - lo)).matrix();

    // Legendre recurrence: (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}.
    Eigen::MatrixXd design(k, terms);
    design.col(0).setOnes();
    if (terms > 1) {
        design.col(1) = t;
    }
    for (size_t n = 1; n + 1 < terms; n++) {
        double a = (double)(2 * n + 1) / (double)(n + 1);
        double b = (double)n / (double)(n + 1);
        design.col((Eigen::Index)(n + 1)) =
            a * t.cwiseProduct(design.col((Eigen::Index)n)) - b * design.col((Eigen::Index)(n - 1));
    }

    if (scale == ResidueScale::kChiSquare) {
        // Zero errors (deterministic points) take the smallest positive one;
        // with no positive error at all every point weighs the same.
        double floor = kInf;
        for (const ScanPoint &pt : points) {
            if (pt.std_error > 0) {
                floor = std::min(floor, pt.std_error);
            }
        }
        if (!std::isfinite(floor)) {
            floor = 1.0;
        }
        for (size_t i = 0; i < k; i++) {
            double e = std::max(points[i].std_error, floor) * std::pow((double)points[i].L, -params.alpha);
            design.row((Eigen::Index)i) /= e;
            y((Eigen::Index)i) /= e;
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if ((size_t)qr.rank() < terms) {
        throw NumericError("polynomial design of rank " + std::to_string(qr.rank()) + " < " + std::to_string(terms));
    }
    Eigen::VectorXd coeffs = qr.solve(y);
    double eps = (design * coeffs - y).squaredNorm() / (double)k;
    if (scale == ResidueScale::kRelative) {
        double var = (y.array() - y.mean()).square().mean();
        if (!(var > 0)) {
            throw NumericError("rescaled y values have zero variance");
        }
        eps /= var;
    }
    return eps;
}

bool sizes_overlap(std::span<const ScanPoint> points, const ScalingParams &params) {
    std::map<size_t, std::pair<double, double>> ranges;
    for (const ScanPoint &pt : points) {
        double x = rescale(pt, params).first;
        auto [it, fresh] = ranges.try_emplace(pt.L, x, x);
        if (!fresh) {
            it->second.first = std::min(it->second.first, x);
            it->second.second = std::max(it->second.second, x);
        }
    }
    double lo = -kInf, hi = kInf;
    for (const auto &[L, r] : ranges) {
        lo = std::max(lo, r.first);
        hi = std::min(hi, r.second);
    }
    return lo < hi;
}

ContourBox contour_box(const std::function<double(double, double)> &eps,
                       double p_c,
                       double nu,
                       double eps_min,
                       const ContourOptions &opt) {
    const size_t g = opt.grid_points | 1;
    if (g < 5) {
        throw std::invalid_argument("contour grid needs at least 5 points per axis");
    }
    const double level = opt.threshold * eps_min;
    double hp = opt.p_c_halfwidth;
    double hn = opt.nu_halfwidth;
    ContourBox box;
    std::vector<double> values(g * g);

    for (size_t round = 0; round < opt.max_rounds; round++) {
        const double dp = 2 * hp / (double)(g - 1);
        const double dn = 2 * hn / (double)(g - 1);
        auto pv = [&](size_t i) { return p_c - hp + dp * (double)i; };
        auto nv = [&](size_t j) { return nu - hn + dn * (double)j; };

#pragma omp parallel for schedule(dynamic)
        for (long idx = 0; idx < (long)(g * g); idx++) {
            size_t i = (size_t)idx / g, j = (size_t)idx % g;
            double v = eps(pv(i), nv(j));
            values[(size_t)idx] = std::isfinite(v) ? v : kInf;
        }
        auto at = [&](size_t i, size_t j) { return values[i * g + j]; };
        auto inside = [&](size_t i, size_t j) { return at(i, j) <= level; };
        // Fraction of a cell from an inside node to the level crossing.
        auto crossing = [&](double v_in, double v_out) {
            return std::isfinite(v_out) ? (level - v_in) / (v_out - v_in) : 0.5;
        };

        box = ContourBox{p_c, p_c, nu, nu, true};
        bool touches_p = false, touches_n = false;
        auto extend_p = [&](double p) {
            box.p_c_lo = std::min(box.p_c_lo, p);
            box.p_c_hi = std::max(box.p_c_hi, p);
        };
        auto extend_n = [&](double n) {
            box.nu_lo = std::min(box.nu_lo, n);
            box.nu_hi = std::max(box.nu_hi, n);
        };
        for (size_t i = 0; i < g; i++) {
            for (size_t j = 0; j < g; j++) {
                if (!inside(i, j)) {
                    continue;
                }
                extend_p(pv(i));
                extend_n(nv(j));
                touches_p |= i == 0 || i == g - 1;
                touches_n |= j == 0 || j == g - 1;
                if (i > 0 && !inside(i - 1, j)) {
                    extend_p(pv(i) - dp * crossing(at(i, j), at(i - 1, j)));
                }
                if (i + 1 < g && !inside(i + 1, j)) {
                    extend_p(pv(i) + dp * crossing(at(i, j), at(i + 1, j)));
                }
                if (j > 0 && !inside(i, j - 1)) {
                    extend_n(nv(j) - dn * crossing(at(i, j), at(i, j - 1)));
                }
                if (j + 1 < g && !inside(i, j + 1)) {
                    extend_n(nv(j) + dn * crossing(at(i, j), at(i, j + 1)));
                }
            }
        }

        bool narrow_p = !touches_p && (box.p_c_hi - box.p_c_lo) < 4 * dp;
        bool narrow_n = !touches_n && (box.nu_hi - box.nu_lo) < 4 * dn;
        box.closed = !(touches_p || touches_n);
        if (box.closed && !narrow_p && !narrow_n) {
            return box;
        }
        if (touches_p) {
            hp *= 2;
        } else if (narrow_p) {
            hp = std::max(0.6 * (box.p_c_hi - box.p_c_lo), hp / 8);
        }
        if (touches_n) {
            hn *= 2;
        } else if (narrow_n) {
            hn = std::max(0.6 * (box.nu_hi - box.nu_lo), hn / 8);
        }
    }
    return box;
}

CollapseResult collapse(std::span<const ScanPoint> points, const ScalingParams &guess, const CollapseOptions &opt) {
    std::set<size_t> sizes;
    std::set<double> ps;
    for (const ScanPoint &pt : points) {
        sizes.insert(pt.L);
        ps.insert(pt.p);
    }
    if (sizes.size() < 3 || ps.size() < 5) {
        throw std::invalid_argument("a collapse needs at least 3 sizes and 5 distinct p values, got " +
                                    std::to_string(sizes.size()) + " and " + std::to_string(ps.size()));
    }

    auto objective = [&](std::span<const double> v) {
        if (!(v[1] > 0) || !(v[2] >= opt.alpha_min && v[2] <= opt.alpha_max)) {
            return kInf;
        }
        try {
            if (opt.require_overlap && !sizes_overlap(points, {v[0], v[1], v[2]})) {
                return kInf;
            }
            return residue(points, {v[0], v[1], v[2]}, opt.degree, opt.scale);
        } catch (const NumericError &) {
            return kInf;
        }
    };
    const double steps[3] = {opt.steps.p_c, opt.steps.nu, opt.steps.alpha};
    NelderMeadResult fit = nelder_mead(objective, {guess.p_c, guess.nu, guess.alpha}, steps, opt.simplex);
    size_t evaluations = fit.evaluations;
    if (fit.converged && evaluations < opt.simplex.max_evaluations) {
        NelderMeadOptions again = opt.simplex;
        again.max_evaluations = opt.simplex.max_evaluations - evaluations;
        NelderMeadResult restart = nelder_mead(objective, fit.x, steps, again);
        evaluations += restart.evaluations;
        if (restart.value <= fit.value) {
            fit = restart;
        }
    }

    CollapseResult result;
    result.p_c = fit.x[0];
    result.nu = fit.x[1];
    result.alpha = fit.x[2];
    result.eps_min = fit.value;
    result.degree = opt.degree;
    result.scale = opt.scale;
    result.converged = fit.converged && std::isfinite(fit.value);
    result.evaluations = evaluations;
    if (result.converged) {
        ContourBox box = uncertainty_scan(points, result, opt.contour);
        result.p_c_err = box.p_c_err();
        result.nu_err = box.nu_err();
        result.errors_closed = box.closed;
    }
    return result;
}

ContourBox uncertainty_scan(std::span<const ScanPoint> points, const CollapseResult &best, const ContourOptions &opt) {
    auto eps = [&](double p_c, double nu) {
        if (!(nu > 0)) {
            return kInf;
        }
        try {
            return residue(points, {p_c, nu, best.alpha}, best.degree, best.scale);
        } catch (const NumericError &) {
            return kInf;
        }
    };
    return contour_box(eps, best.p_c, best.nu, best.eps_min, opt);
}

std::vector<ScanPoint> filter_min_size(std::span<const ScanPoint> points, size_t min_L) {
    std::vector<ScanPoint> out;
    for (const ScanPoint &pt : points) {
        if (pt.L >= min_L) {
            out.push_back(pt);
        }
    }
    return out;
}

std::vector<MasterPoint> master_curve(std::span<const ScanPoint> points, const ScalingParams &params) {
    std::vector<MasterPoint> out;
    out.reserve(points.size());
    for (const ScanPoint &pt : points) {
        auto [x, y] = rescale(pt, params);
        out.push_back({pt.L, pt.p, x, y});
    }
    return out;
}

}  // namespace steerqc
