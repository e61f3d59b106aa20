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

#include "entangler/report.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "entangler/circuit_text.h"
#include "entangler/errors.h"

namespace entangler {

double round_significant(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value == 0 ? 0.0 : value);  // no "-0"
    return buf;
}

namespace {

std::string members_text(const Cut &cut) {
    std::string out;
    for (auto q : cut.members()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(q);
    }
    return out;
}

}  // namespace

nlohmann::json report_to_json(const EntanglementReport &report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : report.per_cut) {
        rows.push_back({{"mask", row.cut.mask()},
                        {"members", row.cut.members()},
                        {"smaller_side", row.cut.smaller_side()},
                        {"contribution", round_significant(row.contribution)}});
    }
    return {{"n", report.num_qubits}, {"total", round_significant(report.total)}, {"per_cut", rows}};
}

std::string report_to_csv(const EntanglementReport &report) {
    std::ostringstream out;
    out << "mask,members,smaller_side,contribution\n";
    for (const auto &row : report.per_cut) {
        out << row.cut.mask() << ',' << members_text(row.cut) << ',' << row.cut.smaller_side() << ','
            << format_number(row.contribution) << '\n';
    }
    return out.str();
}

std::vector<std::string> trace_labels(const Circuit &circuit) {
    std::vector<std::string> labels{"init"};
    for (const Gate &g : circuit.gates) labels.push_back(format_gate(g));
    return labels;
}

nlohmann::json trace_to_json(const Circuit &circuit, const std::vector<TraceStep> &trace) {
    const auto labels = trace_labels(circuit);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &step : trace) {
        rows.push_back({{"step", step.step}, {"gate", labels.at(step.step)}, {"entanglement", round_significant(step.total)}});
    }
    return {{"n", circuit.num_qubits}, {"circuit", format_circuit(circuit)}, {"steps", rows}};
}

std::string trace_to_csv(const Circuit &circuit, const std::vector<TraceStep> &trace) {
    const auto labels = trace_labels(circuit);
    std::ostringstream out;
    out << "step,gate,entanglement\n";
    for (const auto &step : trace) {
        out << step.step << ",\"" << labels.at(step.step) << "\"," << format_number(step.total) << '\n';
    }
    return out.str();
}

nlohmann::json config_to_json(const GAConfig &config) {
    std::vector<std::string> families;
    for (GateKind kind : config.families) families.emplace_back(gate_kind_name(kind));
    nlohmann::json j = {
        {"qubits", config.num_qubits},
        {"gates", families},
        {"length", config.circuit_length},
        {"population", config.population_size},
        {"generations", config.max_generations},
        {"mutation_rate", config.effective_mutation_rate()},
        {"crossover_rate", config.crossover_rate},
        {"tournament_size", config.tournament_size},
        {"elite_count", config.elite_count},
        {"target", nullptr},
        {"seed", config.rng_seed},
    };
    if (config.target_fitness) j["target"] = *config.target_fitness;
    return j;
}

GAConfig config_from_json(const nlohmann::json &j) {
    try {
        GAConfig c;
        c.num_qubits = j.at("qubits").get<std::size_t>();
        c.families.clear();
        for (const auto &name : j.at("gates")) c.families.push_back(gate_kind_from_name(name.get<std::string>()));
        c.circuit_length = j.at("length").get<std::size_t>();
        c.population_size = j.at("population").get<std::size_t>();
        c.max_generations = j.at("generations").get<std::size_t>();
        c.mutation_rate = j.at("mutation_rate").get<double>();
        c.crossover_rate = j.at("crossover_rate").get<double>();
        c.tournament_size = j.at("tournament_size").get<std::size_t>();
        c.elite_count = j.at("elite_count").get<std::size_t>();
        if (!j.at("target").is_null()) c.target_fitness = j.at("target").get<double>();
        c.rng_seed = j.at("seed").get<std::uint64_t>();
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("bad GA config record: ") + e.what());
    }
}

nlohmann::json result_to_json(const EvolutionResult &result) {
    nlohmann::json history = nlohmann::json::array();
    for (const auto &h : result.history) {
        history.push_back({{"generation", h.generation}, {"best", round_significant(h.best)}, {"mean", round_significant(h.mean)}});
    }
    return {
        {"config", config_to_json(result.config)},
        {"seed", result.config.rng_seed},
        {"best_genes", result.best.genes},
        {"circuit", format_circuit(result.circuit)},
        {"best_fitness", round_significant(result.best_fitness)},
        {"target_reached", result.target_reached},
        {"generations_run", result.history.empty() ? 0 : result.history.back().generation},
        {"evaluations", result.evaluations},
        {"history", history},
    };
}

std::string history_to_csv(const EvolutionResult &result) {
    std::ostringstream out;
    out << "generation,best,mean\n";
    for (const auto &h : result.history) {
        out << h.generation << ',' << format_number(h.best) << ',' << format_number(h.mean) << '\n';
    }
    return out.str();
}

}  // namespace entangler
