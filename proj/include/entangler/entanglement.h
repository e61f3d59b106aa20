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
#include <cstdint>
#include <span>
#include <vector>

#include "entangler/state.h"

namespace entangler {

/// Largest Hilbert-space dimension for which the explicit partial-transpose
/// route is allowed (a 4096 x 4096 dense Hermitian matrix).
inline constexpr std::size_t kMaxPartialTransposeDimension = 4096;

/// Eigenvalues above this (and below zero) are treated as zero when summing
/// negative eigenvalues of a partial transpose.
inline constexpr double kNegativeEigenvalueCutoff = -1e-12;

/// A bipartition of qubits {0..n-1}, identified by the side that contains
/// qubit 0. Bit i of `mask` is set when qubit i is on that side.
class Cut {
   public:
    /// Builds the canonical cut for any proper nonempty subset given as a bit
    /// mask, complementing it if it does not contain qubit 0.
    static Cut from_mask(std::size_t num_qubits, std::uint64_t mask);
    static Cut from_members(std::size_t num_qubits, std::span<const std::uint32_t> members);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t mask() const { return mask_; }
    std::vector<std::uint32_t> members() const;
    /// Size of the side containing qubit 0.
    std::size_t size() const;
    /// min(|S|, n - |S|); cuts are grouped by this in reports.
    std::size_t smaller_side() const;

    bool operator==(const Cut &) const = default;

   private:
    Cut(std::size_t num_qubits, std::uint64_t mask) : num_qubits_(num_qubits), mask_(mask) {}

    std::size_t num_qubits_;
    std::uint64_t mask_;
};

/// All 2^(n-1) - 1 inequivalent cuts, ascending by mask. Throws ArgumentError for n < 2.
std::vector<Cut> enumerate_cuts(std::size_t num_qubits);

enum class NegativityMethod {
    /// ((sum of Schmidt coefficients)^2 - 1) / 2 from the reshaped amplitudes.
    kSchmidt,
    /// Minus the sum of negative eigenvalues of the explicit partial transpose.
    kPartialTranspose,
};

/// Ascending eigenvalues of (|psi><psi|)^{T_S}, transposing the qubits in the cut.
/// Throws ResourceError when 2^n exceeds kMaxPartialTransposeDimension.
std::vector<double> partial_transpose_spectrum(const StateVector &state, const Cut &cut);

/// Negativity contribution of one cut (nonnegative).
double cut_negativity(const StateVector &state, const Cut &cut,
                      NegativityMethod method = NegativityMethod::kSchmidt);

struct CutReport {
    Cut cut;
    double contribution;
};

struct EntanglementReport {
    std::size_t num_qubits = 0;
    /// E_N: the sum of all per-cut contributions.
    double total = 0;
    /// Ordered by smaller-side size, then by mask.
    std::vector<CutReport> per_cut;
};

EntanglementReport total_entanglement(const StateVector &state,
                                      NegativityMethod method = NegativityMethod::kSchmidt);

/// Sum over canonical cuts of (2^k - 1)/2, k the smaller side.
double max_entanglement_bound(std::size_t num_qubits);

struct TraceStep {
    /// Number of gates applied so far; step 0 is the initial state.
    std::size_t step;
    double total;
};

/// E_N after each prefix of the circuit, circuit.gates.size() + 1 entries.
std::vector<TraceStep> entanglement_trace(const Circuit &circuit, const StateVector &initial);

/// Precomputed reshaping tables for every cut of an n-qubit system, used to
/// score many states quickly via the Schmidt route. Immutable after
/// construction, so one instance can be shared by concurrent workers.
class NegativityScorer {
   public:
    explicit NegativityScorer(std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Cut> &cuts() const { return cuts_; }

    /// E_N of the given normalized amplitudes (length 2^n).
    double total(std::span<const Complex> amplitudes) const;
    /// Contribution of cuts()[index].
    double cut_contribution(std::span<const Complex> amplitudes, std::size_t index) const;

   private:
    struct Layout {
        std::size_t rows;
        std::size_t cols;
        /// Flat position in the rows x cols matrix for each basis index.
        std::vector<std::uint32_t> position;
    };

    std::size_t num_qubits_;
    std::vector<Cut> cuts_;
    std::vector<Layout> layouts_;
};

}  // namespace entangler
