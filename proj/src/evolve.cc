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

#include "entangler/evolve.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "entangler/errors.h"

namespace entangler {

GateSet build_gate_set(std::size_t num_qubits, std::span<const GateKind> families) {
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw ArgumentError("gate set needs n in [2, " + std::to_string(kMaxQubits) + "], got " +
                            std::to_string(num_qubits));
    }
    if (families.empty()) throw ArgumentError("gate set needs at least one gate family");

    GateSet set;
    set.num_qubits = num_qubits;
    for (GateKind kind : kAllGateKinds) {
        if (std::find(families.begin(), families.end(), kind) == families.end()) continue;
        set.families.push_back(kind);
        const auto n = static_cast<std::uint32_t>(num_qubits);
        if (gate_arity(kind) == 1) {
            for (std::uint32_t q = 0; q < n; ++q) set.table.push_back(Gate::single(kind, q));
        } else {
            for (std::uint32_t i = 0; i < n; ++i) {
                for (std::uint32_t j = 0; j < n; ++j) {
                    if (i != j) set.table.push_back(Gate::pair(kind, i, j));
                }
            }
        }
    }
    return set;
}

Circuit decode(const Chromosome &chromosome, const GateSet &gate_set) {
    Circuit circuit{gate_set.num_qubits, {}};
    circuit.gates.reserve(chromosome.genes.size());
    for (std::size_t i = 0; i < chromosome.genes.size(); ++i) {
        const auto gene = chromosome.genes[i];
        if (gene >= gate_set.size()) {
            throw ArgumentError("gene " + std::to_string(gene) + " at position " + std::to_string(i) +
                                " is outside [0, " + std::to_string(gate_set.size()) + ")");
        }
        circuit.gates.push_back(gate_set.table[gene]);
    }
    return circuit;
}

double fitness(const Chromosome &chromosome, const GateSet &gate_set) {
    return total_entanglement(run_circuit(decode(chromosome, gate_set), zero_state(gate_set.num_qubits))).total;
}

double search_space_size(const GateSet &gate_set, std::size_t length) {
    return std::pow(static_cast<double>(gate_set.size()), static_cast<double>(length));
}

Circuit simplify(const Circuit &circuit) {
    Circuit out{circuit.num_qubits, {}};
    for (const Gate &g : circuit.gates) {
        if (!out.gates.empty() && out.gates.back() == g && is_self_inverse(g.kind)) {
            out.gates.pop_back();
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

FitnessFunction::FitnessFunction(GateSet gate_set)
    : gate_set_(std::move(gate_set)), scorer_(gate_set_.num_qubits) {}

double FitnessFunction::operator()(const Chromosome &chromosome) const {
    StateWorkspace work(zero_state(gate_set_.num_qubits));
    for (const Gate &g : decode(chromosome, gate_set_).gates) work.apply(g);
    return scorer_.total(work.snapshot().amplitudes());
}

double GAConfig::effective_mutation_rate() const {
    if (mutation_rate) return *mutation_rate;
    return circuit_length == 0 ? 0.0 : 1.0 / static_cast<double>(circuit_length);
}

std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome &a, const Chromosome &b,
                                                         std::size_t point) {
    if (a.genes.size() != b.genes.size()) throw ArgumentError("crossover parents differ in length");
    Chromosome c1 = a;
    Chromosome c2 = b;
    for (std::size_t i = std::min(point, a.genes.size()); i < a.genes.size(); ++i) std::swap(c1.genes[i], c2.genes[i]);
    return {std::move(c1), std::move(c2)};
}

void GAConfig::validate() const {
    auto fail = [](const std::string &why) { throw ArgumentError("invalid GA config: " + why); };
    if (num_qubits < 2 || num_qubits > kMaxQubits) fail("qubits must be in [2, " + std::to_string(kMaxQubits) + "]");
    if (families.empty()) fail("no gate families");
    if (circuit_length < 1) fail("circuit length must be >= 1");
    if (population_size < 2) fail("population size must be >= 2");
    if (elite_count >= population_size) fail("elite count must be below population size");
    if (tournament_size < 1) fail("tournament size must be >= 1");
    const double mu = effective_mutation_rate();
    if (!(mu >= 0 && mu <= 1)) fail("mutation rate must be in [0, 1]");
    if (!(crossover_rate >= 0 && crossover_rate <= 1)) fail("crossover rate must be in [0, 1]");
    if (target_fitness && !std::isfinite(*target_fitness)) fail("target fitness must be finite");
    if (workers < 1) fail("workers must be >= 1");
}

namespace {

constexpr double kTargetSlack = 1e-9;

void evaluate_all(const FitnessFunction &fitness_fn, const std::vector<Chromosome> &population,
                  std::vector<double> &scores, std::size_t first, std::size_t workers) {
    const std::size_t count = population.size() - first;
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) scores[i] = fitness_fn(population[i]);
    };
    workers = std::min(workers, count);
    if (workers <= 1) {
        run_range(first, population.size());
        return;
    }
    std::vector<std::jthread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = first + w * chunk;
        const std::size_t end = std::min(population.size(), begin + chunk);
        if (begin < end) threads.emplace_back(run_range, begin, end);
    }
}

/// Index of the best individual; lowest index wins ties.
std::size_t best_index(const std::vector<double> &scores) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) best = i;
    }
    return best;
}

class Breeder {
   public:
    Breeder(const GAConfig &config, std::size_t table_size)
        : config_(config),
          rng_(config.rng_seed),
          gene_(0, static_cast<std::uint32_t>(table_size - 1)),
          mutation_rate_(config.effective_mutation_rate()) {}

    Chromosome random_chromosome() {
        Chromosome c;
        c.genes.resize(config_.circuit_length);
        for (auto &g : c.genes) g = gene_(rng_);
        return c;
    }

    std::size_t tournament(const std::vector<double> &scores) {
        std::uniform_int_distribution<std::size_t> pick(0, scores.size() - 1);
        std::size_t winner = pick(rng_);
        for (std::size_t k = 1; k < config_.tournament_size; ++k) {
            const std::size_t challenger = pick(rng_);
            if (scores[challenger] > scores[winner] ||
                (scores[challenger] == scores[winner] && challenger < winner)) {
                winner = challenger;
            }
        }
        return winner;
    }

    std::pair<Chromosome, Chromosome> crossover(const Chromosome &a, const Chromosome &b) {
        const bool cross = coin_(rng_) < config_.crossover_rate;
        const std::size_t length = a.genes.size();
        if (!cross || length < 2) return {a, b};
        std::uniform_int_distribution<std::size_t> point_dist(1, length - 1);
        return single_point_crossover(a, b, point_dist(rng_));
    }

    void mutate(Chromosome &c) {
        for (auto &g : c.genes) {
            if (coin_(rng_) < mutation_rate_) g = gene_(rng_);
        }
    }

   private:
    const GAConfig &config_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<std::uint32_t> gene_;
    std::uniform_real_distribution<double> coin_{0.0, 1.0};
    double mutation_rate_;
};

}  // namespace

EvolutionResult evolve(const GAConfig &config) {
    config.validate();
    const FitnessFunction fitness_fn(build_gate_set(config.num_qubits, config.families));
    Breeder breeder(config, fitness_fn.gate_set().size());

    EvolutionResult result;
    result.config = config;

    std::vector<Chromosome> population;
    population.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) population.push_back(breeder.random_chromosome());
    std::vector<double> scores(config.population_size);
    evaluate_all(fitness_fn, population, scores, 0, config.workers);
    result.evaluations += population.size();

    auto record = [&](std::size_t generation) {
        const std::size_t best = best_index(scores);
        const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
        result.history.push_back({generation, scores[best], mean});
        result.best = population[best];
        result.best_fitness = scores[best];
    };
    auto reached = [&] { return config.target_fitness && result.best_fitness >= *config.target_fitness - kTargetSlack; };

    record(0);
    for (std::size_t generation = 1; generation <= config.max_generations && !reached(); ++generation) {
        std::vector<std::size_t> order(population.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

        std::vector<Chromosome> next;
        std::vector<double> next_scores;
        next.reserve(config.population_size);
        for (std::size_t e = 0; e < config.elite_count; ++e) {
            next.push_back(population[order[e]]);
            next_scores.push_back(scores[order[e]]);
        }
        const std::size_t elites = next.size();
        while (next.size() < config.population_size) {
            const std::size_t p1 = breeder.tournament(scores);
            const std::size_t p2 = breeder.tournament(scores);
            auto [c1, c2] = breeder.crossover(population[p1], population[p2]);
            breeder.mutate(c1);
            next.push_back(std::move(c1));
            if (next.size() < config.population_size) {
                breeder.mutate(c2);
                next.push_back(std::move(c2));
            }
        }
        next_scores.resize(next.size());
        evaluate_all(fitness_fn, next, next_scores, elites, config.workers);
        result.evaluations += next.size() - elites;

        population = std::move(next);
        scores = std::move(next_scores);
        record(generation);
    }

    result.circuit = decode(result.best, fitness_fn.gate_set());
    result.target_reached = reached();
    return result;
}

std::uint64_t derive_seed(std::uint64_t master, std::size_t length) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(length)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return static_cast<std::uint64_t>(out[0]) << 32 | out[1];
}

std::vector<SweepPoint> length_sweep(const GAConfig &config, std::span<const std::size_t> lengths) {
    if (lengths.empty()) throw ArgumentError("length sweep needs at least one length");
    std::vector<SweepPoint> points;
    for (std::size_t length : lengths) {
        GAConfig sub = config;
        sub.circuit_length = length;
        sub.rng_seed = derive_seed(config.rng_seed, length);
        points.push_back({length, sub.rng_seed, evolve(sub)});
    }
    return points;
}

}  // namespace entangler
