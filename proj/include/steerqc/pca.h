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

#ifndef STEERQC_PCA_H
#define STEERQC_PCA_H

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace steerqc {

/// M samples by N features, every entry +1 or -1.
class SampleMatrix {
   public:
    /// All entries +1.
    SampleMatrix(size_t samples, size_t features);
    /// Takes ownership of `data` after checking the invariants.
    explicit SampleMatrix(Eigen::MatrixXd data);

    size_t samples() const noexcept {
        return (size_t)data_.rows();
    }
    size_t features() const noexcept {
        return (size_t)data_.cols();
    }

    void set_row(size_t i, std::span<const int8_t> outcomes);
    const Eigen::MatrixXd &data() const noexcept {
        return data_;
    }

   private:
    Eigen::MatrixXd data_;
};

struct PcaSummary {
    /// Variance along each of the first N' principal directions, descending.
    /// Equal to the leading covariance eigenvalues; sigma() recomputes one from
    /// the projected samples.
    std::vector<double> sigmas;
    /// Every eigenvalue of the centered covariance, descending.
    std::vector<double> spectrum;
    /// N x N' matrix; column a is the unit weighting vector v_a.
    Eigen::MatrixXd weighting_vectors;
    /// M x 2 projections x_i . v_1 and x_i . v_2 of the raw samples.
    Eigen::MatrixXd projections;
};

/// Eigen-analysis of the column-centered covariance (1/M) X~^T X~.
///
/// Weighting vectors are sign-fixed so that their component sum is
/// non-negative (ties broken by the first nonzero component). Throws
/// std::invalid_argument unless 1 <= n_components <= min(M, N), and
/// NumericError if the eigensolver fails.
PcaSummary pca(const SampleMatrix &x, size_t n_components = 5);

/// (1/M) * sum_i (x_i . v - mean)^2 for direction `direction` (0-based) of
/// `summary`.
double sigma(const SampleMatrix &x, const PcaSummary &summary, size_t direction);

}  // namespace steerqc

#endif
