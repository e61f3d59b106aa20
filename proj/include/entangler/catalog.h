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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entangler/state.h"

namespace entangler {

/// GHZ preparation: H(n-1) first, then CNOT(n-1, m) for m = n-2 down to 0.
/// Throws ArgumentError for n < 2.
Circuit ghz_circuit(std::size_t num_qubits);

/// Circuits by name: circuit_4a, circuit_4b, circuit_5a, circuit_5b,
/// circuit_6a, and circuit_ghzN for any N >= 2. Throws LookupError otherwise.
Circuit named_circuit(std::string_view name);

/// States by name: hs4, bssb5, psi4a, psi4b, psi5a, psi5b, psi6a, psi6b,
/// and ghzN for any N >= 2. Throws LookupError otherwise.
StateVector named_state(std::string_view name);

enum class EntryKind { kCircuit, kState };

struct NamedEntry {
    std::string name;
    EntryKind kind;
    std::size_t num_qubits;
    /// Known E_N of the state (or of the state the circuit prepares from |0...0>).
    std::optional<double> expected_entanglement;
    /// For circuits: the catalog state they prepare from |0...0>, if printed.
    std::optional<std::string> prepares;
    std::string description;
};

/// Every fixed catalog entry plus ghz3..ghz6 and their circuits.
const std::vector<NamedEntry> &catalog_entries();

/// Looks up a catalog entry; throws LookupError for unknown names.
const NamedEntry &catalog_entry(std::string_view name);

/// Relabels qubits: qubit q of `state` becomes qubit mapping[q] of the result.
/// Throws ArgumentError unless `mapping` is a permutation of 0..n-1.
StateVector permute_qubits(const StateVector &state, std::span<const std::uint32_t> mapping);

/// A relabeling taking one catalog state to another exactly.
struct QubitPermutation {
    std::string from;
    std::string to;
    std::vector<std::uint32_t> mapping;
};

/// psi4a -> psi4b and psi5a -> psi5b.
const std::vector<QubitPermutation> &catalog_permutations();

/// True when a = e^{i theta} b componentwise within `tolerance`, with the
/// phase fixed by the first amplitude of `b` whose modulus exceeds 1e-9.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tolerance = 1e-10);

}  // namespace entangler
