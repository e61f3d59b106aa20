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

#include "entangler/entanglement.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "entangler/errors.h"
#include "entangler/linalg.h"

namespace entangler {

namespace {

void require_cut_matches(const StateVector &state, const Cut &cut) {
    if (cut.num_qubits() != state.num_qubits()) {
        throw ArgumentError("cut is for " + std::to_string(cut.num_qubits()) + " qubits but state has " +
                            std::to_string(state.num_qubits()));
    }
}

double negativity_from_schmidt(std::span<const double> sigma) {
    double sum = 0;
    for (double s : sigma) sum += s;
    return std::max(0.0, (sum * sum - 1) / 2);
}

/// The smaller side of the cut, so that the Jacobi sweep rotates fewer vectors.
std::uint64_t row_side(const Cut &cut) {
    const std::size_t n = cut.num_qubits();
    if (cut.size() <= n - cut.size()) return cut.mask();
    return ((std::uint64_t{1} << n) - 1) & ~cut.mask();
}

/// Flat position of basis index i in the matrix whose row index collects the
/// bits of `row_mask` and whose column index collects the remaining bits.
std::size_t reshaped_position(std::size_t i, std::size_t num_qubits, std::uint64_t row_mask, std::size_t cols) {
    std::size_t r = 0;
    std::size_t c = 0;
    std::size_t rbit = 0;
    std::size_t cbit = 0;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        const std::size_t bit = i >> q & 1;
        if (row_mask >> q & 1) {
            r |= bit << rbit++;
        } else {
            c |= bit << cbit++;
        }
    }
    return r * cols + c;
}

}  // namespace

Cut Cut::from_mask(std::size_t num_qubits, std::uint64_t mask) {
    if (num_qubits < 2 || num_qubits > 63) {
        throw ArgumentError("a cut needs between 2 and 63 qubits, got " + std::to_string(num_qubits));
    }
    const std::uint64_t full = (std::uint64_t{1} << num_qubits) - 1;
    if (mask == 0 || (mask & ~full) != 0 || mask == full) {
        throw ArgumentError("cut mask " + std::to_string(mask) + " is not a proper nonempty subset of " +
                            std::to_string(num_qubits) + " qubits");
    }
    if (!(mask & 1)) mask = full & ~mask;
    return Cut(num_qubits, mask);
}

Cut Cut::from_members(std::size_t num_qubits, std::span<const std::uint32_t> members) {
    std::uint64_t mask = 0;
    for (auto q : members) {
        if (q >= num_qubits) throw ArgumentError("cut member " + std::to_string(q) + " out of range");
        mask |= std::uint64_t{1} << q;
    }
    return from_mask(num_qubits, mask);
}

std::vector<std::uint32_t> Cut::members() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 0; q < num_qubits_; ++q) {
        if (mask_ >> q & 1) out.push_back(q);
    }
    return out;
}

std::size_t Cut::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::size_t Cut::smaller_side() const { return std::min(size(), num_qubits_ - size()); }

std::vector<Cut> enumerate_cuts(std::size_t num_qubits) {
    if (num_qubits < 2 || num_qubits > 63) {
        throw ArgumentError("enumerate_cuts needs n in [2, 63], got " + std::to_string(num_qubits));
    }
    std::vector<Cut> cuts;
    const std::uint64_t full = (std::uint64_t{1} << num_qubits) - 1;
    // Odd masks are exactly the subsets containing qubit 0.
    for (std::uint64_t mask = 1; mask < full; mask += 2) cuts.push_back(Cut::from_mask(num_qubits, mask));
    return cuts;
}

std::vector<double> partial_transpose_spectrum(const StateVector &state, const Cut &cut) {
    require_cut_matches(state, cut);
    const std::size_t dim = state.dimension();
    if (dim > kMaxPartialTransposeDimension) {
        throw ResourceError("partial transpose of a " + std::to_string(dim) + "-dimensional state exceeds limit " +
                            std::to_string(kMaxPartialTransposeDimension));
    }
    const auto amps = state.amplitudes();
    const std::uint64_t s = cut.mask();
    Eigen::MatrixXcd pt(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // Swap the cut's bits between the row and column index.
            const std::size_t d = (i ^ j) & s;
            pt(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = amps[i ^ d] * std::conj(amps[j ^ d]);
        }
    }
    return hermitian_eigenvalues(pt);
}

double cut_negativity(const StateVector &state, const Cut &cut, NegativityMethod method) {
    require_cut_matches(state, cut);
    if (method == NegativityMethod::kPartialTranspose) {
        double sum = 0;
        for (double w : partial_transpose_spectrum(state, cut)) {
            if (w < kNegativeEigenvalueCutoff) sum -= w;
        }
        return sum;
    }
    const std::size_t n = state.num_qubits();
    const std::uint64_t row_mask = row_side(cut);
    const std::size_t rows = std::size_t{1} << std::popcount(row_mask);
    const std::size_t cols = state.dimension() / rows;
    std::vector<Complex> reshaped(state.dimension());
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) reshaped[reshaped_position(i, n, row_mask, cols)] = amps[i];
    return negativity_from_schmidt(singular_values(reshaped, rows, cols));
}

EntanglementReport total_entanglement(const StateVector &state, NegativityMethod method) {
    EntanglementReport report;
    report.num_qubits = state.num_qubits();
    for (const Cut &cut : enumerate_cuts(state.num_qubits())) {
        report.per_cut.push_back({cut, cut_negativity(state, cut, method)});
        report.total += report.per_cut.back().contribution;
    }
    std::stable_sort(report.per_cut.begin(), report.per_cut.end(), [](const CutReport &a, const CutReport &b) {
        return a.cut.smaller_side() < b.cut.smaller_side();
    });
    return report;
}

double max_entanglement_bound(std::size_t num_qubits) {
    double bound = 0;
    for (const Cut &cut : enumerate_cuts(num_qubits)) {
        bound += (std::ldexp(1.0, static_cast<int>(cut.smaller_side())) - 1) / 2;
    }
    return bound;
}

std::vector<TraceStep> entanglement_trace(const Circuit &circuit, const StateVector &initial) {
    if (circuit.num_qubits != initial.num_qubits()) {
        throw ArgumentError("circuit has " + std::to_string(circuit.num_qubits) + " qubits but state has " +
                            std::to_string(initial.num_qubits()));
    }
    circuit.validate();
    const NegativityScorer scorer(initial.num_qubits());
    StateWorkspace work(initial);
    std::vector<TraceStep> trace;
    trace.push_back({0, scorer.total(work.amplitudes())});
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        work.apply(circuit.gates[i]);
        trace.push_back({i + 1, scorer.total(work.snapshot().amplitudes())});
    }
    return trace;
}

NegativityScorer::NegativityScorer(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw ArgumentError("NegativityScorer supports at most " + std::to_string(kMaxQubits) + " qubits");
    }
    cuts_ = enumerate_cuts(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    for (const Cut &cut : cuts_) {
        const std::uint64_t row_mask = row_side(cut);
        const std::size_t rows = std::size_t{1} << std::popcount(row_mask);
        Layout layout{rows, dim / rows, std::vector<std::uint32_t>(dim)};
        for (std::size_t i = 0; i < dim; ++i) {
            layout.position[i] = static_cast<std::uint32_t>(reshaped_position(i, num_qubits, row_mask, layout.cols));
        }
        layouts_.push_back(std::move(layout));
    }
}

double NegativityScorer::cut_contribution(std::span<const Complex> amplitudes, std::size_t index) const {
    const Layout &layout = layouts_.at(index);
    if (amplitudes.size() != layout.position.size()) {
        throw ArgumentError("NegativityScorer: amplitude count does not match qubit count");
    }
    std::vector<Complex> reshaped(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i) reshaped[layout.position[i]] = amplitudes[i];
    return negativity_from_schmidt(singular_values(reshaped, layout.rows, layout.cols));
}

double NegativityScorer::total(std::span<const Complex> amplitudes) const {
    double sum = 0;
    for (std::size_t i = 0; i < cuts_.size(); ++i) sum += cut_contribution(amplitudes, i);
    return sum;
}

}  // namespace entangler
