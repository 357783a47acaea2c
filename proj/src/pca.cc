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

#include "steerqc/pca.h"

#include <stdexcept>
#include <string>

#include "steerqc/errors.h"

namespace steerqc {

namespace {

void check_shape(size_t samples, size_t features) {
    if (samples < 2 || features < 2) {
        throw DimensionError("a sample matrix needs at least 2 samples and 2 features, got " +
                             std::to_string(samples) + "x" + std::to_string(features));
    }
}

double projected_variance(const Eigen::MatrixXd &x, const Eigen::VectorXd &v) {
    Eigen::VectorXd proj = x * v;
    double mean = proj.mean();
    return (proj.array() - mean).square().sum() / (double)x.rows();
}

}  // namespace

SampleMatrix::SampleMatrix(size_t samples, size_t features)
    : data_(Eigen::MatrixXd::Ones((Eigen::Index)samples, (Eigen::Index)features)) {
    check_shape(samples, features);
}

SampleMatrix::SampleMatrix(Eigen::MatrixXd data) : data_(std::move(data)) {
    check_shape((size_t)data_.rows(), (size_t)data_.cols());
    if (!(data_.array().abs() == 1.0).all()) {
        throw std::invalid_argument("sample entries must be +1 or -1");
    }
}

void SampleMatrix::set_row(size_t i, std::span<const int8_t> outcomes) {
    if (outcomes.size() != features() || i >= samples()) {
        throw DimensionError("row " + std::to_string(i) + " of width " + std::to_string(outcomes.size()) +
                             " does not fit a " + std::to_string(samples()) + "x" + std::to_string(features()) +
                             " matrix");
    }
    for (size_t j = 0; j < outcomes.size(); j++) {
        if (outcomes[j] != 1 && outcomes[j] != -1) {
            throw std::invalid_argument("sample entries must be +1 or -1");
        }
        data_((Eigen::Index)i, (Eigen::Index)j) = outcomes[j];
    }
}

PcaSummary pca(const SampleMatrix &x, size_t n_components) {
    const Eigen::MatrixXd &data = x.data();
    const size_t m = x.samples();
    const size_t n = x.features();
    if (n_components < 1 || n_components > std::min(m, n)) {
        throw std::invalid_argument("n_components must lie in [1, " + std::to_string(std::min(m, n)) + "], got " +
                                    std::to_string(n_components));
    }

    Eigen::RowVectorXd mean = data.colwise().mean();
    Eigen::MatrixXd centered = data.rowwise() - mean;
    Eigen::MatrixXd cov = (centered.transpose() * centered) / (double)m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw NumericError("covariance eigensolve failed");
    }

    // Eigen sorts ascending.
    const Eigen::VectorXd &values = solver.eigenvalues();
    const Eigen::MatrixXd &vectors = solver.eigenvectors();
    PcaSummary out;
    out.spectrum.resize(n);
    for (size_t k = 0; k < n; k++) {
        out.spectrum[k] = std::max(0.0, values((Eigen::Index)(n - 1 - k)));
    }

    size_t kept = std::max<size_t>(n_components, 2);
    Eigen::MatrixXd basis(n, kept);
    for (size_t a = 0; a < kept; a++) {
        Eigen::VectorXd v = vectors.col((Eigen::Index)(n - 1 - a));
        double total = v.sum();
        if (std::abs(total) < 1e-12) {
            Eigen::Index first = 0;
            while (first < v.size() && std::abs(v(first)) < 1e-12) {
                first++;
            }
            total = first < v.size() ? v(first) : 1.0;
        }
        if (total < 0) {
            v = -v;
        }
        basis.col((Eigen::Index)a) = v;
    }

    out.weighting_vectors = basis.leftCols((Eigen::Index)n_components);
    out.projections = data * basis.leftCols(2);
    out.sigmas.resize(n_components);
    for (size_t a = 0; a < n_components; a++) {
        out.sigmas[a] = out.spectrum[a];
    }
    return out;
}

double sigma(const SampleMatrix &x, const PcaSummary &summary, size_t direction) {
    if (direction >= (size_t)summary.weighting_vectors.cols()) {
        throw std::invalid_argument("direction " + std::to_string(direction) + " beyond the " +
                                    std::to_string(summary.weighting_vectors.cols()) + " computed");
    }
    return projected_variance(x.data(), summary.weighting_vectors.col((Eigen::Index)direction));
}

}  // namespace steerqc
