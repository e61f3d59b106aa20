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

// Brute-force reference implementations. They share no code with the library
// beyond the StateVector/Gate value types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entangler/state.h"

namespace oracle {

using entangler::Complex;
using entangler::Gate;
using entangler::GateKind;
using Matrix = Eigen::MatrixXcd;

inline Eigen::Matrix2cd gate_matrix_2x2(GateKind kind) {
    const Complex i(0, 1);
    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (kind) {
        case GateKind::H: m << r, r, r, -r; break;
        case GateKind::X: m << 0, 1, 1, 0; break;
        case GateKind::Y: m << 0, -i, i, 0; break;
        case GateKind::Z: m << 1, 0, 0, -1; break;
        case GateKind::S: m << 1, 0, 0, i; break;
        case GateKind::T: m << 1, 0, 0, std::polar(1.0, M_PI / 4); break;
        default: m.setIdentity();
    }
    return m;
}

/// Full 2^n x 2^n unitary: Kronecker products for single-qubit gates (qubit 0
/// is the rightmost factor), explicit permutation/phase for CNOT and CZ.
inline Matrix full_unitary(const Gate &gate, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    if (gate.kind == GateKind::CNOT || gate.kind == GateKind::CZ) {
        Matrix u = Matrix::Zero(dim, dim);
        for (std::size_t col = 0; col < dim; ++col) {
            const bool control = (col >> gate.first) & 1;
            if (gate.kind == GateKind::CNOT) {
                u(control ? col ^ (std::size_t{1} << gate.second) : col, col) = 1;
            } else {
                u(col, col) = control && ((col >> gate.second) & 1) ? -1 : 1;
            }
        }
        return u;
    }
    Matrix u = Matrix::Identity(1, 1);
    for (std::size_t q = n; q-- > 0;) {
        const Matrix factor = q == gate.first ? Matrix(gate_matrix_2x2(gate.kind)) : Matrix::Identity(2, 2);
        Matrix next(u.rows() * 2, u.cols() * 2);
        for (Eigen::Index a = 0; a < u.rows(); ++a)
            for (Eigen::Index b = 0; b < u.cols(); ++b) next.block(a * 2, b * 2, 2, 2) = u(a, b) * factor;
        u = next;
    }
    return u;
}

/// Product U_{N-1} ... U_0 applied to `initial`.
inline std::vector<Complex> run_by_matrix(const std::vector<Gate> &gates, std::size_t n,
                                          std::span<const Complex> initial) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix total = Matrix::Identity(dim, dim);
    for (const Gate &g : gates) total = full_unitary(g, n) * total;
    Eigen::VectorXcd v(dim);
    for (std::size_t k = 0; k < dim; ++k) v(k) = initial[k];
    Eigen::VectorXcd out = total * v;
    return {out.data(), out.data() + dim};
}

/// rho^{T_S} built from the full density matrix by swapping the cut's bits
/// between row and column indices.
inline Matrix partial_transpose(std::span<const Complex> psi, std::uint64_t mask) {
    const std::size_t dim = psi.size();
    Matrix rho(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) rho(a, b) = psi[a] * std::conj(psi[b]);
    Matrix pt(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            const std::size_t a2 = (a & ~mask) | (b & mask);
            const std::size_t b2 = (b & ~mask) | (a & mask);
            pt(a, b) = rho(a2, b2);
        }
    }
    return pt;
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi on its real symmetric
/// embedding [[Re, -Im], [Im, Re]], whose spectrum repeats each eigenvalue twice.
inline std::vector<double> jacobi_eigenvalues(const Matrix &a) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd m(2 * n, 2 * n);
    m << a.real(), -a.imag(), a.imag(), a.real();
    const Eigen::Index size = 2 * n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (Eigen::Index p = 0; p < size; ++p)
            for (Eigen::Index q = p + 1; q < size; ++q) off += m(p, q) * m(p, q);
        if (off < 1e-30) break;
        for (Eigen::Index p = 0; p < size; ++p) {
            for (Eigen::Index q = p + 1; q < size; ++q) {
                if (std::abs(m(p, q)) < 1e-300) continue;
                const double theta = (m(q, q) - m(p, p)) / (2 * m(p, q));
                const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double sn = t * c;
                for (Eigen::Index k = 0; k < size; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - sn * mkq;
                    m(k, q) = sn * mkp + c * mkq;
                }
                for (Eigen::Index k = 0; k < size; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - sn * mqk;
                    m(q, k) = sn * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> doubled(size);
    for (Eigen::Index i = 0; i < size; ++i) doubled[i] = m(i, i);
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> out;
    for (Eigen::Index i = 0; i < size; i += 2) out.push_back((doubled[i] + doubled[i + 1]) / 2);
    return out;
}

inline double negativity(std::span<const Complex> psi, std::uint64_t mask) {
    double sum = 0;
    for (double ev : jacobi_eigenvalues(partial_transpose(psi, mask))) {
        if (ev < -1e-12) sum -= ev;
    }
    return sum;
}

/// E_N summed over every bipartition S containing qubit 0.
inline double total_negativity(std::span<const Complex> psi) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < psi.size()) ++n;
    double total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; mask += 2) total += negativity(psi, mask);
    return total;
}

/// Characteristic polynomial coefficients c_0..c_n (c_n = 1) by Faddeev-LeVerrier.
inline std::vector<long double> characteristic_polynomial(const Matrix &a) {
    using LMatrix = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = a.rows();
    const LMatrix al = a.cast<std::complex<long double>>();
    std::vector<long double> c(n + 1);
    c[n] = 1;
    LMatrix m = LMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = al * m + LMatrix::Identity(n, n) * std::complex<long double>(c[n - k + 1]);
        c[n - k] = -(al * m).trace().real() / static_cast<long double>(k);
    }
    return c;
}

/// Real roots of the characteristic polynomial of a Hermitian matrix, by grid
/// scan plus bisection. Assumes simple roots.
inline std::vector<double> eigenvalues_by_bisection(const Matrix &a) {
    const auto c = characteristic_polynomial(a);
    auto p = [&](long double x) {
        long double v = 0;
        for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
        return v;
    };
    const long double bound = a.norm() + 1;
    const int steps = 200000;
    std::vector<double> roots;
    long double prev_x = -bound;
    long double prev = p(prev_x);
    for (int s = 1; s <= steps; ++s) {
        const long double x = -bound + 2 * bound * s / steps;
        const long double v = p(x);
        if ((prev < 0) != (v < 0)) {
            long double lo = prev_x, hi = x;
            for (int it = 0; it < 200; ++it) {
                const long double mid = (lo + hi) / 2;
                ((p(lo) < 0) == (p(mid) < 0) ? lo : hi) = mid;
            }
            roots.push_back(static_cast<double>((lo + hi) / 2));
        }
        prev_x = x;
        prev = v;
    }
    return roots;
}

inline Matrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = Complex(g(rng), g(rng));
    return (m + m.adjoint()) / 2.0;
}

inline entangler::StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
        a = Complex(g(rng), g(rng));
        norm += std::norm(a);
    }
    for (auto &a : amps) a /= std::sqrt(norm);
    return entangler::StateVector::from_amplitudes(std::move(amps));
}

inline Gate random_gate(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind_dist(0, 7);
    std::uniform_int_distribution<std::uint32_t> qubit(0, static_cast<std::uint32_t>(n - 1));
    const auto kind = entangler::kAllGateKinds[kind_dist(rng)];
    if (entangler::gate_arity(kind) == 1) return Gate::single(kind, qubit(rng));
    const std::uint32_t a = qubit(rng);
    std::uint32_t b = qubit(rng);
    while (b == a) b = qubit(rng);
    return Gate::pair(kind, a, b);
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

}  // namespace oracle
