// Copyright 2026 The Entangler Authors
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

#include "entangler/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entangler/errors.h"

namespace entangler {

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &matrix, bool validate) {
    if (matrix.rows() != matrix.cols()) {
        throw ArgumentError("hermitian_eigenvalues: matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()));
    }
    const double asymmetry = matrix.size() == 0 ? 0.0 : (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > kHermitianTolerance) {
        throw ArgumentError("hermitian_eigenvalues: matrix is not Hermitian (max |A - A^H| = " +
                            std::to_string(asymmetry) + ")");
    }

    const auto options = validate ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, options);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    }
    if (validate) {
        const Eigen::MatrixXcd &v = solver.eigenvectors();
        const Eigen::MatrixXcd rebuilt = v * solver.eigenvalues().cast<Complex>().asDiagonal() * v.adjoint();
        const double residual = (rebuilt - matrix).cwiseAbs().maxCoeff();
        if (residual > 1e-9) {
            throw std::logic_error("hermitian_eigenvalues: reconstruction residual " + std::to_string(residual));
        }
    }
    // Eigen returns eigenvalues already sorted ascending.
    const auto &w = solver.eigenvalues();
    return std::vector<double>(w.data(), w.data() + w.size());
}

std::vector<double> singular_values(std::span<const Complex> data, std::size_t rows, std::size_t cols) {
    if (data.size() != rows * cols) throw ArgumentError("singular_values: data size does not match shape");

    // Hestenes: rotate pairs of rows until all are mutually orthogonal. The
    // row norms are then the singular values. Each rotation is a left unitary.
    std::vector<Complex> a(data.begin(), data.end());
    auto row = [&](std::size_t r) { return a.data() + r * cols; };

    constexpr int kMaxSweeps = 60;
    constexpr double kEps = 1e-15;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < rows; ++p) {
            for (std::size_t q = p + 1; q < rows; ++q) {
                Complex *x = row(p);
                Complex *y = row(q);
                double alpha = 0;
                double beta = 0;
                Complex gamma = 0;
                for (std::size_t j = 0; j < cols; ++j) {
                    alpha += std::norm(x[j]);
                    beta += std::norm(y[j]);
                    gamma += std::conj(x[j]) * y[j];
                }
                const double g = std::abs(gamma);
                if (g <= kEps * std::sqrt(alpha * beta) || g == 0) continue;
                rotated = true;

                // Rephase y so that <x, y> is real, then apply a real Jacobi rotation.
                const Complex phase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = c * t;
                for (std::size_t j = 0; j < cols; ++j) {
                    const Complex xj = x[j];
                    const Complex yj = y[j] * phase;
                    x[j] = c * xj - s * yj;
                    y[j] = s * xj + c * yj;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        double norm = 0;
        for (std::size_t j = 0; j < cols; ++j) norm += std::norm(row(r)[j]);
        sigma[r] = std::sqrt(norm);
    }
    return sigma;
}

}  // namespace entangler
