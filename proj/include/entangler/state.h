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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace entangler {

using Complex = std::complex<double>;

/// Largest qubit count a StateVector may hold.
inline constexpr std::size_t kMaxQubits = 16;

/// Tolerance on |1 - <psi|psi>| for a state to count as normalized.
inline constexpr double kNormTolerance = 1e-12;

/// An n-qubit pure state. Amplitude index k encodes the basis ket
/// |q_{n-1} ... q_0> with q_i = (k >> i) & 1, so qubit 0 is the least
/// significant bit.
class StateVector {
   public:
    /// Takes ownership of `amplitudes`, which must have power-of-two length
    /// 2^n (1 <= n <= kMaxQubits) and unit norm within kNormTolerance.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm_squared() const;

    bool operator==(const StateVector &) const = default;

   private:
    friend StateVector zero_state(std::size_t num_qubits);
    friend class StateWorkspace;
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

enum class GateKind : std::uint8_t { H, X, Y, Z, S, T, CNOT, CZ };

/// All kinds in declaration order. Gate-set tables follow this order.
inline constexpr GateKind kAllGateKinds[] = {
    GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::S, GateKind::T, GateKind::CNOT, GateKind::CZ};

std::string_view gate_kind_name(GateKind kind);
/// Inverse of gate_kind_name; throws ArgumentError on an unknown name.
GateKind gate_kind_from_name(std::string_view name);
/// 1 for single-qubit kinds, 2 for CNOT and CZ.
std::size_t gate_arity(GateKind kind);
/// True when applying the gate twice is the identity.
bool is_self_inverse(GateKind kind);

/// A placed elementary gate. For CNOT the first qubit is the control and the
/// second the target. `second` is unused for single-qubit kinds.
struct Gate {
    GateKind kind;
    std::uint32_t first = 0;
    std::uint32_t second = 0;

    static Gate single(GateKind kind, std::uint32_t qubit);
    static Gate pair(GateKind kind, std::uint32_t a, std::uint32_t b);

    /// Throws ArgumentError unless all labels are < num_qubits and distinct.
    void validate(std::size_t num_qubits) const;

    bool operator==(const Gate &) const = default;
};

/// An ordered gate sequence in application order: gates[0] acts first.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;

    /// Throws ArgumentError if any gate is invalid for num_qubits.
    void validate() const;

    bool operator==(const Circuit &) const = default;
};

/// |0...0> on `num_qubits` qubits. Throws ArgumentError outside [1, kMaxQubits].
StateVector zero_state(std::size_t num_qubits);

/// The 2x2 unitary of a single-qubit kind, row-major.
std::array<Complex, 4> single_qubit_matrix(GateKind kind);

/// Returns gate|state>. Throws ArgumentError on invalid qubit labels.
StateVector apply_gate(const StateVector &state, const Gate &gate);

/// Applies the circuit's gates in order. Throws ArgumentError when the
/// circuit's qubit count differs from the state's.
StateVector run_circuit(const Circuit &circuit, const StateVector &initial);

/// Number of amplitudes with modulus strictly above `tolerance`.
std::size_t nonzero_coefficient_count(const StateVector &state, double tolerance = 1e-9);

/// Mutable amplitude buffer used when applying gates in place. Consumers
/// that apply many gates (fitness evaluation, traces) reuse one workspace
/// instead of allocating a new StateVector per gate.
class StateWorkspace {
   public:
    explicit StateWorkspace(const StateVector &initial);

    void apply(const Gate &gate);
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::size_t num_qubits() const { return num_qubits_; }

    /// Checks norm drift and returns the (renormalized if needed) state.
    /// Drift above 1e-9 throws std::logic_error.
    StateVector snapshot() const;

   private:
    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

}  // namespace entangler
