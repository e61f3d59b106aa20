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

#include "entangler/catalog.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "entangler/circuit_text.h"
#include "entangler/errors.h"

namespace entangler {

namespace {

/// Unnormalized sparse-free ket used to transcribe printed states. The
/// leftmost character of a bit string is the highest qubit.
struct Ket {
    std::size_t num_qubits;
    std::vector<Complex> amps;

    static Ket basis(std::string_view bits) {
        Ket k{bits.size(), std::vector<Complex>(std::size_t{1} << bits.size())};
        std::size_t index = 0;
        for (char c : bits) index = index << 1 | static_cast<std::size_t>(c == '1');
        k.amps[index] = 1;
        return k;
    }

    Ket operator+(const Ket &other) const {
        Ket out = *this;
        for (std::size_t i = 0; i < amps.size(); ++i) out.amps[i] += other.amps[i];
        return out;
    }
    Ket operator-(const Ket &other) const { return *this + other * Complex{-1}; }
    Ket operator*(Complex c) const {
        Ket out = *this;
        for (auto &a : out.amps) a *= c;
        return out;
    }
    /// Tensor product; `*this` occupies the high qubits.
    Ket operator^(const Ket &low) const {
        Ket out{num_qubits + low.num_qubits, std::vector<Complex>(amps.size() * low.amps.size())};
        for (std::size_t i = 0; i < amps.size(); ++i) {
            for (std::size_t j = 0; j < low.amps.size(); ++j) out.amps[i * low.amps.size() + j] = amps[i] * low.amps[j];
        }
        return out;
    }

    StateVector state() const { return StateVector::from_amplitudes(amps); }
};

Ket k(std::string_view bits) { return Ket::basis(bits); }

const double kRootHalf = 1 / std::numbers::sqrt2;

// Bell kets: psi± = (|00> ± |11>)/√2, phi± = (|01> ± |10>)/√2.
Ket psi_plus() { return (k("00") + k("11")) * kRootHalf; }
Ket psi_minus() { return (k("00") - k("11")) * kRootHalf; }
Ket phi_plus() { return (k("01") + k("10")) * kRootHalf; }
Ket phi_minus() { return (k("01") - k("10")) * kRootHalf; }

StateVector hs4() {
    const Complex omega{-0.5, std::sqrt(3.0) / 2};
    const Ket sum = k("1100") + k("0011") + (k("1001") + k("0110")) * omega + (k("1010") + k("0101")) * (omega * omega);
    return (sum * (1 / std::sqrt(6.0))).state();
}

StateVector bssb5() {
    return (((k("001") ^ phi_minus()) + (k("010") ^ psi_minus()) + (k("100") ^ phi_plus()) +
             (k("111") ^ psi_plus())) *
            0.5)
        .state();
}

StateVector psi4a() { return ((k("0000") + k("0110") + k("1011") + k("1101")) * 0.5).state(); }

StateVector psi4b() { return (((k("00") ^ psi_plus()) + (k("11") ^ phi_plus())) * kRootHalf).state(); }

StateVector psi5a() {
    const Ket sum = k("00000") + k("00111") + k("01011") + k("01100") + k("10010") + k("10101") - k("11001") -
                    k("11110");
    return (sum * (1 / std::sqrt(8.0))).state();
}

StateVector psi5b() {
    return (((k("000") ^ psi_plus()) + (k("011") ^ phi_plus()) + (k("101") ^ phi_minus()) +
             (k("110") ^ psi_minus())) *
            0.5)
        .state();
}

StateVector psi6a() {
    static constexpr std::pair<const char *, int> kTerms[] = {
        {"000000", +1}, {"000001", +1}, {"000010", +1}, {"000011", -1},  //
        {"001100", -1}, {"001101", +1}, {"001110", +1}, {"001111", +1},  //
        {"010100", +1}, {"010101", +1}, {"010110", -1}, {"010111", +1},  //
        {"011000", +1}, {"011001", -1}, {"011010", +1}, {"011011", +1},  //
        {"100100", +1}, {"100101", -1}, {"100110", +1}, {"100111", +1},  //
        {"101000", +1}, {"101001", +1}, {"101010", -1}, {"101011", +1},  //
        {"110000", +1}, {"110001", -1}, {"110010", -1}, {"110011", -1},  //
        {"111100", -1}, {"111101", -1}, {"111110", -1}, {"111111", +1},
    };
    Ket sum{6, std::vector<Complex>(64)};
    for (const auto &[bits, sign] : kTerms) sum = sum + k(bits) * Complex(sign);
    return (sum * (1 / std::sqrt(32.0))).state();
}

StateVector psi6b() {
    const Ket sum = ((k("0000") - k("1111")) ^ psi_plus()) + ((k("1100") - k("0011")) ^ phi_minus()) +
                    ((k("0101") + k("1010")) ^ psi_minus()) + ((k("0110") + k("1001")) ^ phi_plus());
    return (sum * (1 / std::sqrt(8.0))).state();
}

StateVector ghz_state(std::size_t n) {
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = kRootHalf;
    amps.back() = kRootHalf;
    return StateVector::from_amplitudes(std::move(amps));
}

/// Parses the N of "<prefix>N"; nullopt if the name does not have that shape.
std::optional<std::size_t> ghz_size(std::string_view name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    std::size_t n = 0;
    const char *first = name.data() + prefix.size();
    const char *last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return n;
}

struct CircuitSpec {
    std::string_view name;
    std::size_t num_qubits;
    std::string_view gates;
};

// Application order: the leftmost gate acts first.
constexpr CircuitSpec kCircuits[] = {
    {"circuit_4a", 4, "H(2); CNOT(2,1); H(3); CNOT(3,0); CNOT(3,1)"},
    {"circuit_4b", 4, "H(1); CNOT(1,0); H(3); CNOT(3,2); CNOT(3,0)"},
    {"circuit_5a", 5, "H(2); CNOT(2,1); H(4); CNOT(4,3); H(4); CNOT(1,0); CNOT(4,1); CNOT(3,2)"},
    {"circuit_5b", 5, "H(0); CNOT(0,3); H(4); CNOT(4,1); H(4); CNOT(3,2); CNOT(4,3); CNOT(1,0)"},
    {"circuit_6a", 6,
     "H(1); CNOT(1,0); H(3); CNOT(3,2); H(5); CNOT(5,4); CNOT(3,0); CNOT(5,2); H(4); CNOT(4,3); H(1); CNOT(4,1); "
     "CNOT(2,1)"},
};

}  // namespace

Circuit ghz_circuit(std::size_t num_qubits) {
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw ArgumentError("GHZ circuit needs n in [2, " + std::to_string(kMaxQubits) + "], got " +
                            std::to_string(num_qubits));
    }
    const auto top = static_cast<std::uint32_t>(num_qubits - 1);
    Circuit c{num_qubits, {Gate::single(GateKind::H, top)}};
    for (std::uint32_t m = top; m-- > 0;) c.gates.push_back(Gate::pair(GateKind::CNOT, top, m));
    return c;
}

Circuit named_circuit(std::string_view name) {
    for (const auto &spec : kCircuits) {
        if (spec.name == name) return parse_circuit(spec.gates, spec.num_qubits);
    }
    if (auto n = ghz_size(name, "circuit_ghz"); n && *n >= 2 && *n <= kMaxQubits) return ghz_circuit(*n);
    throw LookupError("unknown catalog circuit '" + std::string(name) + "'");
}

StateVector named_state(std::string_view name) {
    if (name == "hs4") return hs4();
    if (name == "bssb5") return bssb5();
    if (name == "psi4a") return psi4a();
    if (name == "psi4b") return psi4b();
    if (name == "psi5a") return psi5a();
    if (name == "psi5b") return psi5b();
    if (name == "psi6a") return psi6a();
    if (name == "psi6b") return psi6b();
    if (auto n = ghz_size(name, "ghz"); n && *n >= 2 && *n <= kMaxQubits) return ghz_state(*n);
    throw LookupError("unknown catalog state '" + std::string(name) + "'");
}

const std::vector<NamedEntry> &catalog_entries() {
    static const std::vector<NamedEntry> entries = [] {
        std::vector<NamedEntry> out;
        for (std::size_t n = 3; n <= 6; ++n) {
            const std::string suffix = std::to_string(n);
            const double ghz_value = (std::ldexp(1.0, static_cast<int>(n) - 1) - 1) / 2;
            out.push_back({"ghz" + suffix, EntryKind::kState, n, ghz_value, std::nullopt,
                           "(|0...0> + |1...1>)/sqrt(2)"});
            out.push_back({"circuit_ghz" + suffix, EntryKind::kCircuit, n, ghz_value, "ghz" + suffix,
                           "Hadamard on the top qubit, then a CNOT fan-out"});
        }
        out.push_back({"hs4", EntryKind::kState, 4, 6.0981, std::nullopt,
                       "highly entangled 4-qubit state with third-root-of-unity phases"});
        out.push_back({"psi4a", EntryKind::kState, 4, 5.5, std::nullopt, "4-qubit state from two Bell pairs + CNOT"});
        out.push_back({"psi4b", EntryKind::kState, 4, 5.5, std::nullopt, "qubit relabeling of psi4a"});
        out.push_back({"bssb5", EntryKind::kState, 5, 17.5, std::nullopt, "maximally entangled 5-qubit state"});
        out.push_back({"psi5a", EntryKind::kState, 5, 17.5, std::nullopt, "8-term maximally entangled 5-qubit state"});
        out.push_back({"psi5b", EntryKind::kState, 5, 17.5, std::nullopt, "qubit relabeling of psi5a"});
        out.push_back({"psi6a", EntryKind::kState, 6, 60.5, std::nullopt,
                       "maximally entangled 6-qubit state, 32 nonzero coefficients"});
        out.push_back({"psi6b", EntryKind::kState, 6, 60.5, std::nullopt,
                       "maximally entangled 6-qubit state, 16 nonzero coefficients"});
        out.push_back({"circuit_4a", EntryKind::kCircuit, 4, 5.5, "psi4a", "5 gates: 2 H, 3 CNOT"});
        out.push_back({"circuit_4b", EntryKind::kCircuit, 4, 5.5, "psi4b", "5 gates: 2 H, 3 CNOT"});
        out.push_back({"circuit_5a", EntryKind::kCircuit, 5, 17.5, "psi5a", "8 gates: 3 H, 5 CNOT"});
        out.push_back({"circuit_5b", EntryKind::kCircuit, 5, 17.5, "psi5b", "8 gates: 3 H, 5 CNOT"});
        out.push_back({"circuit_6a", EntryKind::kCircuit, 6, 60.5, "psi6a", "13 gates: 5 H, 8 CNOT"});
        return out;
    }();
    return entries;
}

const NamedEntry &catalog_entry(std::string_view name) {
    for (const auto &e : catalog_entries()) {
        if (e.name == name) return e;
    }
    throw LookupError("unknown catalog entry '" + std::string(name) + "'");
}

StateVector permute_qubits(const StateVector &state, std::span<const std::uint32_t> mapping) {
    const std::size_t n = state.num_qubits();
    std::vector<bool> seen(n);
    if (mapping.size() != n) throw ArgumentError("permutation size does not match qubit count");
    for (auto q : mapping) {
        if (q >= n || seen[q]) throw ArgumentError("mapping is not a permutation of the qubits");
        seen[q] = true;
    }
    std::vector<Complex> out(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        std::size_t j = 0;
        for (std::size_t q = 0; q < n; ++q) j |= (i >> q & 1) << mapping[q];
        out[j] = state[i];
    }
    return StateVector::from_amplitudes(std::move(out));
}

const std::vector<QubitPermutation> &catalog_permutations() {
    static const std::vector<QubitPermutation> perms = {
        {"psi4a", "psi4b", {2, 0, 1, 3}},
        {"psi5a", "psi5b", {2, 0, 3, 4, 1}},
    };
    return perms;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tolerance) {
    if (a.dimension() != b.dimension()) return false;
    std::size_t anchor = b.dimension();
    for (std::size_t i = 0; i < b.dimension(); ++i) {
        if (std::abs(b[i]) > 1e-9) {
            anchor = i;
            break;
        }
    }
    if (anchor == b.dimension() || std::abs(a[anchor]) < 1e-12) return false;
    const Complex phase = a[anchor] / b[anchor];
    if (std::abs(std::abs(phase) - 1) > tolerance) return false;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - phase * b[i]) > tolerance) return false;
    }
    return true;
}

}  // namespace entangler
