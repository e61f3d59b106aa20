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
#include <optional>
#include <string>
#include <string_view>

#include "entangler/state.h"

namespace entangler {

enum class GateOrder {
    /// Leftmost gate acts first; `H(2); CNOT(2,1); CNOT(2,0)`.
    kApplication,
    /// Matrix-product notation, rightmost gate acts first; `CNOT(2,0)CNOT(2,1)H(2)`.
    kProduct,
};

/// Parses the `.qc` circuit grammar:
///
///     circuit := [gate (';' gate)* [';']]
///     gate    := KIND '(' label [',' label] ')'
///
/// Whitespace (including newlines) may appear between tokens and `#` starts
/// a comment running to end of line. Gates are in application order.
///
/// When `num_qubits` is absent the qubit count is inferred as the largest
/// label plus one, and at least `min_qubits`. Throws ParseError with the
/// offending token's line and column on any grammar or arity violation.
Circuit parse_circuit(std::string_view text, std::optional<std::size_t> num_qubits = std::nullopt,
                      std::size_t min_qubits = 1);

/// `KIND(a)` or `KIND(a,b)`.
std::string format_gate(const Gate &gate);

/// Application order joins gates with "; ". Product order reverses the gates
/// and juxtaposes them without separators, matching how circuits are written
/// as operator products.
std::string format_circuit(const Circuit &circuit, GateOrder order = GateOrder::kApplication);

}  // namespace entangler
