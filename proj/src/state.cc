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

#include "entangler/state.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entangler/errors.h"

namespace entangler {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kRenormalizeLimit = 1e-9;

double sum_norm(std::span<const Complex> amplitudes) {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

void apply_single(std::vector<Complex> &amps, GateKind kind, std::size_t qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t dim = amps.size();
    switch (kind) {
        case GateKind::X:
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(k & mask)) std::swap(amps[k], amps[k | mask]);
            }
            return;
        case GateKind::Z:
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & mask) amps[k] = -amps[k];
            }
            return;
        case GateKind::S:
        case GateKind::T: {
            const Complex phase = kind == GateKind::S ? Complex{0, 1} : std::polar(1.0, std::numbers::pi / 4);
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & mask) amps[k] *= phase;
            }
            return;
        }
        case GateKind::Y:
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & mask) continue;
                const Complex a0 = amps[k];
                const Complex a1 = amps[k | mask];
                amps[k] = Complex{a1.imag(), -a1.real()};          // -i * a1
                amps[k | mask] = Complex{-a0.imag(), a0.real()};   // i * a0
            }
            return;
        case GateKind::H:
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & mask) continue;
                const Complex a0 = amps[k];
                const Complex a1 = amps[k | mask];
                amps[k] = (a0 + a1) * kInvSqrt2;
                amps[k | mask] = (a0 - a1) * kInvSqrt2;
            }
            return;
        default:
            throw std::logic_error("apply_single: two-qubit kind");
    }
}

void apply_in_place(std::vector<Complex> &amps, std::size_t num_qubits, const Gate &gate) {
    gate.validate(num_qubits);
    if (gate_arity(gate.kind) == 1) {
        apply_single(amps, gate.kind, gate.first);
        return;
    }
    const std::size_t m1 = std::size_t{1} << gate.first;
    const std::size_t m2 = std::size_t{1} << gate.second;
    const std::size_t dim = amps.size();
    if (gate.kind == GateKind::CNOT) {
        for (std::size_t k = 0; k < dim; ++k) {
            if ((k & m1) && !(k & m2)) std::swap(amps[k], amps[k | m2]);
        }
    } else {
        for (std::size_t k = 0; k < dim; ++k) {
            if ((k & m1) && (k & m2)) amps[k] = -amps[k];
        }
    }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw ArgumentError("amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n > kMaxQubits) {
        throw ArgumentError("state has " + std::to_string(n) + " qubits; limit is " + std::to_string(kMaxQubits));
    }
    const double norm = sum_norm(amplitudes);
    if (std::abs(norm - 1) > kNormTolerance) {
        throw ArgumentError("state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const { return sum_norm(amplitudes_); }

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
    for (GateKind kind : kAllGateKinds) {
        if (gate_kind_name(kind) == name) return kind;
    }
    throw ArgumentError("unknown gate kind '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) { return kind == GateKind::CNOT || kind == GateKind::CZ ? 2 : 1; }

bool is_self_inverse(GateKind kind) { return kind != GateKind::S && kind != GateKind::T; }

Gate Gate::single(GateKind kind, std::uint32_t qubit) {
    if (gate_arity(kind) != 1) throw ArgumentError(std::string(gate_kind_name(kind)) + " takes two qubits");
    return Gate{kind, qubit, 0};
}

Gate Gate::pair(GateKind kind, std::uint32_t a, std::uint32_t b) {
    if (gate_arity(kind) != 2) throw ArgumentError(std::string(gate_kind_name(kind)) + " takes one qubit");
    return Gate{kind, a, b};
}

void Gate::validate(std::size_t num_qubits) const {
    if (first >= num_qubits || (gate_arity(kind) == 2 && second >= num_qubits)) {
        throw ArgumentError(std::string(gate_kind_name(kind)) + " qubit label out of range for " +
                            std::to_string(num_qubits) + " qubits");
    }
    if (gate_arity(kind) == 2 && first == second) {
        throw ArgumentError(std::string(gate_kind_name(kind)) + " needs two distinct qubits");
    }
}

void Circuit::validate() const {
    for (const auto &g : gates) g.validate(num_qubits);
}

StateVector zero_state(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ArgumentError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                            std::to_string(num_qubits));
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[0] = 1;
    return StateVector(num_qubits, std::move(amps));
}

std::array<Complex, 4> single_qubit_matrix(GateKind kind) {
    using namespace std::complex_literals;
    switch (kind) {
        case GateKind::H: return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -1i, 1i, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S: return {1.0, 0.0, 0.0, 1i};
        case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
        default: throw ArgumentError(std::string(gate_kind_name(kind)) + " is not a single-qubit gate");
    }
}

StateVector apply_gate(const StateVector &state, const Gate &gate) {
    StateWorkspace work(state);
    work.apply(gate);
    return work.snapshot();
}

StateVector run_circuit(const Circuit &circuit, const StateVector &initial) {
    if (circuit.num_qubits != initial.num_qubits()) {
        throw ArgumentError("circuit has " + std::to_string(circuit.num_qubits) + " qubits but state has " +
                            std::to_string(initial.num_qubits()));
    }
    StateWorkspace work(initial);
    for (const auto &g : circuit.gates) work.apply(g);
    return work.snapshot();
}

std::size_t nonzero_coefficient_count(const StateVector &state, double tolerance) {
    std::size_t count = 0;
    for (const auto &a : state.amplitudes()) {
        if (std::abs(a) > tolerance) ++count;
    }
    return count;
}

StateWorkspace::StateWorkspace(const StateVector &initial)
    : num_qubits_(initial.num_qubits()), amplitudes_(initial.amplitudes().begin(), initial.amplitudes().end()) {}

void StateWorkspace::apply(const Gate &gate) { apply_in_place(amplitudes_, num_qubits_, gate); }

StateVector StateWorkspace::snapshot() const {
    const double drift = std::abs(sum_norm(amplitudes_) - 1);
    if (drift > kRenormalizeLimit) {
        throw std::logic_error("norm drift " + std::to_string(drift) + " after gate application");
    }
    std::vector<Complex> amps = amplitudes_;
    if (drift > kNormTolerance) {
        const double scale = 1 / std::sqrt(sum_norm(amps));
        for (auto &a : amps) a *= scale;
    }
    return StateVector(num_qubits_, std::move(amps));
}

}  // namespace entangler
