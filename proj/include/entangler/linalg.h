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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entangler/state.h"

namespace entangler {

/// Maximum deviation from Hermiticity, max |A - A^dagger|, accepted by
/// hermitian_eigenvalues.
inline constexpr double kHermitianTolerance = 1e-10;

/// All eigenvalues of a dense Hermitian matrix in ascending order.
///
/// Throws ArgumentError if the matrix is not square or not Hermitian within
/// kHermitianTolerance. With `validate` set, also reconstructs V diag(w) V^dagger
/// and throws std::logic_error if it differs from the input by more than 1e-9.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &matrix, bool validate = false);

/// Singular values of the `rows x cols` row-major matrix `data`, computed by
/// one-sided Jacobi rotations on the rows. Order is unspecified. Cheapest when
/// rows <= cols.
std::vector<double> singular_values(std::span<const Complex> data, std::size_t rows, std::size_t cols);

}  // namespace entangler
