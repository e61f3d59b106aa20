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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "entangler/errors.h"
#include "oracles.h"

namespace entangler {
namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

TEST(ZeroState, Basics) {
    const StateVector one = zero_state(1);
    ASSERT_EQ(one.dimension(), 2u);
    EXPECT_EQ(one[0], Complex(1));
    EXPECT_EQ(one[1], Complex(0));

    const StateVector three = zero_state(3);
    ASSERT_EQ(three.dimension(), 8u);
    EXPECT_EQ(three[0], Complex(1));
    for (std::size_t k = 1; k < 8; ++k) EXPECT_EQ(three[k], Complex(0));
}

TEST(ZeroState, RejectsOutOfRange) {
    EXPECT_THROW(zero_state(0), ArgumentError);
    EXPECT_THROW(zero_state(kMaxQubits + 1), ArgumentError);
    EXPECT_NO_THROW(zero_state(kMaxQubits));
}

TEST(FromAmplitudes, Validates) {
    EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), ArgumentError);
    EXPECT_THROW(StateVector::from_amplitudes({1, 1}), ArgumentError);
    EXPECT_THROW(StateVector::from_amplitudes({}), ArgumentError);
    EXPECT_THROW(StateVector::from_amplitudes({1}), ArgumentError);
    const auto s = StateVector::from_amplitudes({kInvSqrt2, Complex(0, kInvSqrt2)});
    EXPECT_EQ(s.num_qubits(), 1u);
    EXPECT_NEAR(s.norm_squared(), 1, 1e-15);
}

TEST(ApplyGate, HadamardOnZero) {
    const StateVector s = apply_gate(zero_state(1), Gate::single(GateKind::H, 0));
    EXPECT_NEAR(std::abs(s[0] - kInvSqrt2), 0, 1e-15);
    EXPECT_NEAR(std::abs(s[1] - kInvSqrt2), 0, 1e-15);
}

TEST(ApplyGate, BellPairOnQubitsTwoAndOne) {
    StateVector s = apply_gate(zero_state(3), Gate::single(GateKind::H, 2));
    s = apply_gate(s, Gate::pair(GateKind::CNOT, 2, 1));
    for (std::size_t k = 0; k < 8; ++k) {
        const double expected = (k == 0b000 || k == 0b110) ? kInvSqrt2 : 0;
        EXPECT_NEAR(std::abs(s[k] - expected), 0, 1e-15) << k;
    }
}

TEST(ApplyGate, RejectsBadLabels) {
    EXPECT_THROW(apply_gate(zero_state(2), Gate::single(GateKind::X, 2)), ArgumentError);
    EXPECT_THROW(apply_gate(zero_state(2), Gate::pair(GateKind::CNOT, 0, 2)), ArgumentError);
    EXPECT_THROW(apply_gate(zero_state(2), Gate::pair(GateKind::CZ, 1, 1)), ArgumentError);
}

TEST(ApplyGate, BasisIndexConvention) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::uint32_t i = 0; i < n; ++i) {
            const StateVector s = apply_gate(zero_state(n), Gate::single(GateKind::X, i));
            EXPECT_EQ(s[std::size_t{1} << i], Complex(1));
            EXPECT_EQ(nonzero_coefficient_count(s), 1u);
        }
    }
}

TEST(ApplyGate, XTwiceIsIdentity) {
    std::mt19937_64 rng(11);
    const StateVector s = oracle::random_state(3, rng);
    const auto x = Gate::single(GateKind::X, 1);
    EXPECT_LE(oracle::max_abs_diff(apply_gate(apply_gate(s, x), x).amplitudes(), s.amplitudes()), 1e-12);
}

TEST(Properties, Unitarity) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const StateVector s = oracle::random_state(n, rng);
        for (GateKind kind : kAllGateKinds) {
            const Gate g = gate_arity(kind) == 1 ? Gate::single(kind, trial % n)
                                                 : Gate::pair(kind, trial % n, (trial + 1) % n);
            EXPECT_NEAR(apply_gate(s, g).norm_squared(), 1, 1e-12);
        }
    }
}

TEST(Properties, SelfInverseGates) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector s = oracle::random_state(3, rng);
        for (GateKind kind : kAllGateKinds) {
            if (!is_self_inverse(kind)) continue;
            const Gate g = gate_arity(kind) == 1 ? Gate::single(kind, trial % 3)
                                                 : Gate::pair(kind, (trial + 2) % 3, trial % 3);
            EXPECT_LE(oracle::max_abs_diff(apply_gate(apply_gate(s, g), g).amplitudes(), s.amplitudes()), 1e-12)
                << gate_kind_name(kind);
        }
    }
    EXPECT_FALSE(is_self_inverse(GateKind::S));
    EXPECT_FALSE(is_self_inverse(GateKind::T));
}

TEST(Properties, RunCircuitMatchesFullMatrixProduct) {
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            Circuit c{n, {}};
            const int length = trial % 12;
            for (int i = 0; i < length; ++i) {
                Gate g = oracle::random_gate(n < 2 ? 2 : n, rng);
                if (n == 1) g = Gate::single(g.kind == GateKind::CNOT || g.kind == GateKind::CZ ? GateKind::H : g.kind, 0);
                c.gates.push_back(g);
            }
            const StateVector initial = oracle::random_state(n, rng);
            const auto expected = oracle::run_by_matrix(c.gates, n, initial.amplitudes());
            EXPECT_LE(oracle::max_abs_diff(run_circuit(c, initial).amplitudes(), expected), 1e-12);
        }
    }
}

TEST(RunCircuit, GhzThree) {
    const Circuit c{3, {Gate::single(GateKind::H, 2), Gate::pair(GateKind::CNOT, 2, 1), Gate::pair(GateKind::CNOT, 2, 0)}};
    const StateVector s = run_circuit(c, zero_state(3));
    EXPECT_NEAR(std::abs(s[0] - kInvSqrt2), 0, 1e-15);
    EXPECT_NEAR(std::abs(s[7] - kInvSqrt2), 0, 1e-15);
    EXPECT_EQ(nonzero_coefficient_count(s), 2u);
}

TEST(RunCircuit, EmptyCircuitIsIdentity) {
    std::mt19937_64 rng(5);
    const StateVector s = oracle::random_state(4, rng);
    EXPECT_EQ(run_circuit(Circuit{4, {}}, s), s);
}

TEST(RunCircuit, DimensionMismatch) {
    EXPECT_THROW(run_circuit(Circuit{3, {}}, zero_state(2)), ArgumentError);
}

TEST(NonzeroCount, Tolerance) {
    EXPECT_EQ(nonzero_coefficient_count(zero_state(4)), 1u);
    const auto s = StateVector::from_amplitudes({std::sqrt(1 - 1e-20), 1e-10});
    EXPECT_EQ(nonzero_coefficient_count(s), 1u);
    EXPECT_EQ(nonzero_coefficient_count(s, 0), 2u);
}

TEST(GateKinds, NamesRoundTrip) {
    for (GateKind kind : kAllGateKinds) EXPECT_EQ(gate_kind_from_name(gate_kind_name(kind)), kind);
    EXPECT_THROW(gate_kind_from_name("cnot"), ArgumentError);
    EXPECT_EQ(gate_arity(GateKind::CZ), 2u);
    EXPECT_EQ(gate_arity(GateKind::T), 1u);
}

TEST(Workspace, SnapshotMatchesApplyGate) {
    std::mt19937_64 rng(6);
    const StateVector s = oracle::random_state(4, rng);
    StateWorkspace work(s);
    StateVector expected = s;
    for (int i = 0; i < 25; ++i) {
        const Gate g = oracle::random_gate(4, rng);
        work.apply(g);
        expected = apply_gate(expected, g);
    }
    EXPECT_LE(oracle::max_abs_diff(work.snapshot().amplitudes(), expected.amplitudes()), 1e-12);
}

}  // namespace
}  // namespace entangler
