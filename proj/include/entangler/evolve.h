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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "entangler/entanglement.h"
#include "entangler/state.h"

namespace entangler {

/// Every placement of the chosen gate families on n qubits, indexed by gene
/// value. Families appear in GateKind declaration order; single-qubit
/// families contribute one entry per qubit (ascending), two-qubit families
/// one entry per ordered pair (i, j), i != j, in lexicographic order.
struct GateSet {
    std::size_t num_qubits = 0;
    std::vector<GateKind> families;
    std::vector<Gate> table;

    std::size_t size() const { return table.size(); }
};

/// Throws ArgumentError when n < 2 or `families` is empty. Duplicate
/// families are collapsed.
GateSet build_gate_set(std::size_t num_qubits, std::span<const GateKind> families);

/// Fixed-length integer genome; gene i selects the i-th applied gate.
struct Chromosome {
    std::vector<std::uint32_t> genes;

    bool operator==(const Chromosome &) const = default;
};

/// Throws ArgumentError on a gene outside [0, gate_set.size()).
Circuit decode(const Chromosome &chromosome, const GateSet &gate_set);

/// E_N of decode(chromosome) applied to |0...0>.
double fitness(const Chromosome &chromosome, const GateSet &gate_set);

/// Number of distinct chromosomes of the given length, as a double.
double search_space_size(const GateSet &gate_set, std::size_t length);

/// Removes adjacent pairs of identical self-inverse gates until none remain.
/// Never applied during evolution; offered for post-hoc inspection.
Circuit simplify(const Circuit &circuit);

/// Reusable fitness evaluator for one gate set. Immutable after construction
/// and safe to share across threads.
/// Children take genes [0, point) from one parent and [point, L) from the other.
std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome &a, const Chromosome &b,
                                                         std::size_t point);

class FitnessFunction {
   public:
    explicit FitnessFunction(GateSet gate_set);

    const GateSet &gate_set() const { return gate_set_; }
    double operator()(const Chromosome &chromosome) const;

   private:
    GateSet gate_set_;
    NegativityScorer scorer_;
};

struct GAConfig {
    std::size_t num_qubits = 3;
    std::vector<GateKind> families{GateKind::H, GateKind::CNOT};
    std::size_t circuit_length = 3;
    std::size_t population_size = 100;
    std::size_t max_generations = 500;
    /// Defaults to 1 / circuit_length when absent.
    std::optional<double> mutation_rate;
    double crossover_rate = 0.9;
    std::size_t tournament_size = 2;
    std::size_t elite_count = 1;
    /// Stop as soon as the best fitness reaches target - 1e-9.
    std::optional<double> target_fitness;
    std::uint64_t rng_seed = 1;
    /// Threads used for fitness evaluation. Does not affect results.
    std::size_t workers = 1;

    double effective_mutation_rate() const;
    /// Throws ArgumentError describing the first invalid field.
    void validate() const;
};

struct GenerationStats {
    std::size_t generation;
    double best;
    double mean;
};

struct EvolutionResult {
    GAConfig config;
    Chromosome best;
    Circuit circuit;
    double best_fitness = 0;
    /// Entry 0 describes the random initial population.
    std::vector<GenerationStats> history;
    std::size_t evaluations = 0;
    bool target_reached = false;
};

/// Runs the generational GA:
///
///   1. Initial population: for each individual in order, each gene drawn
///      uniformly from the gate table.
///   2. Each generation: the `elite_count` best individuals (ties broken by
///      lower index) are copied unchanged. The rest is filled pairwise: two
///      tournament winners (each from `tournament_size` uniform draws with
///      replacement; ties go to the lower index), one crossover coin, a
///      single cut point in [1, L-1] when crossing over, then per-gene
///      mutation coins (with a uniform redraw on a hit) for the first child
///      and, if it fits, the second.
///
/// All randomness comes from one std::mt19937_64 seeded with rng_seed and
/// is consumed in exactly that order. Fitness evaluation draws nothing, so
/// `workers` changes only wall-clock time.
EvolutionResult evolve(const GAConfig &config);

struct SweepPoint {
    std::size_t length;
    std::uint64_t seed;
    EvolutionResult result;
};

/// Per-length sub-seed derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::size_t length);

/// Runs evolve once per length with circuit_length and rng_seed overridden.
std::vector<SweepPoint> length_sweep(const GAConfig &config, std::span<const std::size_t> lengths);

}  // namespace entangler
