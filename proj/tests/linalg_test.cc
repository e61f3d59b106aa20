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
#include <random>

#include <gtest/gtest.h>

#include "entangler/errors.h"
#include "oracles.h"

namespace entangler {
namespace {

TEST(HermitianEigenvalues, Trivial) {
    EXPECT_EQ(hermitian_eigenvalues(Eigen::MatrixXcd::Identity(4, 4)), (std::vector<double>{1, 1, 1, 1}));
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 3;
    d(1, 1) = -1;
    const auto ev = hermitian_eigenvalues(d, true);
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0], -1, 1e-14);
    EXPECT_NEAR(ev[1], 3, 1e-14);
}

TEST(HermitianEigenvalues, RejectsBadInput) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(hermitian_eigenvalues(m), ArgumentError);
    EXPECT_THROW(hermitian_eigenvalues(Eigen::MatrixXcd::Zero(2, 3)), ArgumentError);
    m(1, 0) = 1 + 1e-12;
    EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

TEST(HermitianEigenvalues, MatchesCharacteristicPolynomialOracle) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXcd a = oracle::random_hermitian(8, rng);
        const auto expected = oracle::eigenvalues_by_bisection(a);
        ASSERT_EQ(expected.size(), 8u);
        const auto got = hermitian_eigenvalues(a, true);
        ASSERT_EQ(got.size(), 8u);
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(got[i], expected[i], 1e-8) << trial;
    }
}

TEST(SingularValues, MatchEigenJacobiSvd) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    for (auto [rows, cols] : {std::pair{1, 8}, {2, 2}, {4, 8}, {8, 8}, {8, 4}, {3, 5}}) {
        std::vector<Complex> data(rows * cols);
        for (auto &x : data) x = Complex(g(rng), g(rng));
        Eigen::MatrixXcd m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(r, c) = data[r * cols + c];
        Eigen::VectorXd expected = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
        std::vector<double> got = singular_values(data, rows, cols);
        std::sort(got.rbegin(), got.rend());
        ASSERT_GE(got.size(), static_cast<std::size_t>(expected.size()));
        for (Eigen::Index i = 0; i < expected.size(); ++i) EXPECT_NEAR(got[i], expected(i), 1e-12);
        for (std::size_t i = expected.size(); i < got.size(); ++i) EXPECT_NEAR(got[i], 0, 1e-12);
    }
}

TEST(SingularValues, RankOne) {
    // |00> + |11> reshaped 2x2 has singular values {1/sqrt2, 1/sqrt2}.
    const double r = 1 / std::sqrt(2.0);
    auto sv = singular_values(std::vector<Complex>{r, 0, 0, r}, 2, 2);
    std::sort(sv.begin(), sv.end());
    EXPECT_NEAR(sv[0], r, 1e-15);
    EXPECT_NEAR(sv[1], r, 1e-15);
    sv = singular_values(std::vector<Complex>{1, 0, 0, 0}, 2, 2);
    std::sort(sv.begin(), sv.end());
    EXPECT_NEAR(sv[0], 0, 1e-15);
    EXPECT_NEAR(sv[1], 1, 1e-15);
}

}  // namespace
}  // namespace entangler
