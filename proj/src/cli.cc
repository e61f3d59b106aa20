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

#include "entangler/cli.h"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entangler/catalog.h"
#include "entangler/circuit_text.h"
#include "entangler/entanglement.h"
#include "entangler/errors.h"
#include "entangler/evolve.h"
#include "entangler/report.h"

namespace entangler::cli {

namespace {

using nlohmann::json;

/// Raised for flag combinations CLI11 cannot express; maps to kUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A ParseError with the source name prepended; maps to kDataError.
struct SourceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to --out when given, else to `out`.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << text;
}

/// Replaces `--config <path>` (or `--config=<path>`) with the file's entries
/// as `--key value` pairs, placed before the remaining flags so that explicit
/// flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> head;
    std::vector<std::string> tail;
    std::vector<std::string> injected;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].starts_with("--config=")) {
            path = args[i].substr(9);
        } else {
            (head.size() < 2 && tail.empty() && injected.empty() ? head : tail).push_back(args[i]);
            continue;
        }
        for (const auto &[key, value] : read_flat_config(path)) {
            injected.push_back("--" + key);
            injected.push_back(value);
        }
    }
    head.insert(head.end(), injected.begin(), injected.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

struct GaFlags {
    std::size_t qubits = 0;
    std::vector<std::string> gates{"H", "CNOT"};
    std::size_t length = 0;
    std::size_t population = 100;
    std::size_t generations = 500;
    std::optional<double> mutation_rate;
    double crossover_rate = 0.9;
    std::size_t tournament = 2;
    std::size_t elite = 1;
    std::optional<std::uint64_t> seed;
    std::string target;
    std::size_t workers = 1;
};

void add_ga_options(CLI::App *cmd, GaFlags &f) {
    cmd->add_option("--qubits,-n", f.qubits, "Number of qubits (>= 2)");
    cmd->add_option("--gates", f.gates, "Gate families, e.g. H,CNOT")->delimiter(',');
    cmd->add_option("--length,-L", f.length, "Circuit length (genes per chromosome)");
    cmd->add_option("--pop", f.population, "Population size");
    cmd->add_option("--gens", f.generations, "Maximum number of generations");
    cmd->add_option("--mutation-rate", f.mutation_rate, "Per-gene mutation probability (default 1/L)");
    cmd->add_option("--crossover-rate", f.crossover_rate, "Single-point crossover probability");
    cmd->add_option("--tournament", f.tournament, "Tournament size");
    cmd->add_option("--elite", f.elite, "Elite count");
    cmd->add_option("--seed", f.seed, "RNG seed (falls back to $ENTANGLER_SEED, then 1)");
    cmd->add_option("--target", f.target, "Stop at this E_N; 'max' uses the theoretical bound");
    cmd->add_option("--workers", f.workers, "Threads for fitness evaluation (results do not depend on it)");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) return *flag;
    if (const char *env = std::getenv("ENTANGLER_SEED"); env && *env) {
        char *end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (*end != '\0') throw UsageError(std::string("ENTANGLER_SEED is not an integer: '") + env + "'");
        return value;
    }
    return 1;
}

GAConfig build_config(const GaFlags &f) {
    if (f.length == 0) throw UsageError("--length is required and must be at least 1");
    if (f.qubits < 2) throw UsageError("--qubits must be at least 2 (entanglement needs a bipartition)");
    if (f.qubits > kMaxQubits) throw UsageError("--qubits must be at most " + std::to_string(kMaxQubits));
    GAConfig c;
    c.num_qubits = f.qubits;
    c.families.clear();
    for (const auto &name : f.gates) {
        try {
            c.families.push_back(gate_kind_from_name(trim(name)));
        } catch (const ArgumentError &e) {
            throw UsageError(e.what());
        }
    }
    c.circuit_length = f.length;
    c.population_size = f.population;
    c.max_generations = f.generations;
    c.mutation_rate = f.mutation_rate;
    c.crossover_rate = f.crossover_rate;
    c.tournament_size = f.tournament;
    c.elite_count = f.elite;
    c.rng_seed = resolve_seed(f.seed);
    c.workers = f.workers;
    if (f.target == "max") {
        c.target_fitness = max_entanglement_bound(f.qubits);
    } else if (!f.target.empty()) {
        char *end = nullptr;
        const double t = std::strtod(f.target.c_str(), &end);
        if (*end != '\0') throw UsageError("--target must be a number or 'max', got '" + f.target + "'");
        c.target_fitness = t;
    }
    return c;
}

void validate_or_usage(const GAConfig &c) {
    try {
        c.validate();
    } catch (const ArgumentError &e) {
        throw UsageError(e.what());
    }
}

/// Where evaluate/trace get their circuit or state from.
struct SourceFlags {
    std::optional<std::string> circuit_file;
    std::optional<std::string> catalog;
    std::optional<std::string> text;
    std::optional<std::size_t> qubits;
};

void add_source_options(CLI::App *cmd, SourceFlags &f) {
    cmd->add_option("--circuit,-c", f.circuit_file, "Circuit file (.qc)");
    cmd->add_option("--catalog", f.catalog, "Catalog circuit or state name");
    cmd->add_option("--text,-t", f.text, "Circuit text, e.g. 'H(0); CNOT(0,1)'");
    cmd->add_option("--qubits,-n", f.qubits, "Qubit count (default: inferred from labels, at least 2)");
}

struct Source {
    std::string label;
    std::optional<Circuit> circuit;
    StateVector state;
};

Source load_source(const SourceFlags &f) {
    const int given = f.circuit_file.has_value() + f.catalog.has_value() + f.text.has_value();
    if (given != 1) throw UsageError("give exactly one of --circuit, --catalog, --text");
    if (f.qubits && *f.qubits < 2) throw UsageError("--qubits must be at least 2");

    if (f.catalog) {
        const std::string &name = *f.catalog;
        if (name.starts_with("circuit_")) {
            Circuit c = named_circuit(name);
            StateVector s = run_circuit(c, zero_state(c.num_qubits));
            return {name, std::move(c), std::move(s)};
        }
        StateVector s = named_state(name);
        if (s.num_qubits() < 2) throw UsageError("catalog state has fewer than 2 qubits");
        return {name, std::nullopt, std::move(s)};
    }

    const std::string label = f.circuit_file.value_or("<text>");
    const std::string text = f.circuit_file ? read_file(*f.circuit_file) : *f.text;
    Circuit c;
    try {
        c = parse_circuit(text, f.qubits, 2);
    } catch (const ParseError &e) {
        throw SourceParseError(label + ":" + e.what());
    }
    if (c.num_qubits > kMaxQubits) throw UsageError("circuit needs more than " + std::to_string(kMaxQubits) + " qubits");
    StateVector s = run_circuit(c, zero_state(c.num_qubits));
    return {label, std::move(c), std::move(s)};
}

std::string bitstring(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if (index >> q & 1) s[n - 1 - q] = '1';
    }
    return s;
}

std::string amplitude_csv(const StateVector &state, bool include_zero) {
    std::ostringstream out;
    out << "index,bitstring,real,imag\n";
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (!include_zero && std::abs(state[i]) <= 1e-12) continue;
        out << i << ',' << bitstring(i, state.num_qubits()) << ',' << format_number(state[i].real()) << ','
            << format_number(state[i].imag()) << '\n';
    }
    return out.str();
}

json amplitude_json(const StateVector &state) {
    json rows = json::array();
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        rows.push_back({{"index", i},
                        {"bitstring", bitstring(i, state.num_qubits())},
                        {"real", round_significant(state[i].real())},
                        {"imag", round_significant(state[i].imag())}});
    }
    return rows;
}

int cmd_evaluate(const SourceFlags &sf, const std::string &format, bool dump_state, bool validate, bool paper_order,
                 std::ostream &out) {
    const Source src = load_source(sf);
    const EntanglementReport report = total_entanglement(src.state);
    if (validate) {
        const EntanglementReport oracle = total_entanglement(src.state, NegativityMethod::kPartialTranspose);
        for (std::size_t i = 0; i < report.per_cut.size(); ++i) {
            if (std::abs(report.per_cut[i].contribution - oracle.per_cut[i].contribution) > 1e-10) {
                throw std::runtime_error("validation failed: Schmidt and partial-transpose routes disagree on cut " +
                                         std::to_string(report.per_cut[i].cut.mask()));
            }
        }
    }
    const std::size_t nonzero = nonzero_coefficient_count(src.state);
    const auto order = paper_order ? GateOrder::kProduct : GateOrder::kApplication;

    if (format == "json") {
        json j = {{"source", src.label},
                  {"entanglement", report_to_json(report)},
                  {"bound", max_entanglement_bound(report.num_qubits)},
                  {"nonzero_coefficients", nonzero},
                  {"validated", validate}};
        if (src.circuit) j["circuit"] = format_circuit(*src.circuit, order);
        if (dump_state) j["state"] = amplitude_json(src.state);
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << report_to_csv(report);
        if (dump_state) out << '\n' << amplitude_csv(src.state, true);
    } else {
        out << "source: " << src.label << '\n';
        if (src.circuit) out << "circuit: " << format_circuit(*src.circuit, order) << '\n';
        out << "qubits: " << report.num_qubits << '\n';
        out << "E_N: " << format_number(report.total) << '\n';
        out << "bound: " << format_number(max_entanglement_bound(report.num_qubits)) << '\n';
        out << "nonzero coefficients: " << nonzero << '\n';
        if (validate) out << "validated: partial-transpose route agrees within 1e-10\n";
        out << '\n' << report_to_csv(report);
        if (dump_state) out << '\n' << amplitude_csv(src.state, true);
    }
    return kOk;
}

int cmd_trace(const SourceFlags &sf, const std::string &format, const std::string &out_path, std::ostream &out) {
    const Source src = load_source(sf);
    if (!src.circuit) throw UsageError("'" + src.label + "' is a state, not a circuit; trace needs a circuit");
    const auto trace = entanglement_trace(*src.circuit, zero_state(src.circuit->num_qubits));
    if (format == "json") {
        emit(trace_to_json(*src.circuit, trace).dump(2) + "\n", out_path, out);
    } else {
        emit(trace_to_csv(*src.circuit, trace), out_path, out);
    }
    return kOk;
}

int cmd_evolve(GaFlags flags, const std::string &replay, const std::string &format, const std::string &out_path,
               const std::vector<std::string> &command, std::ostream &out, std::ostream &err) {
    GAConfig config;
    if (!replay.empty()) {
        const json record = json::parse(read_file(replay));
        const json &cfg = record.contains("result") ? record.at("result").at("config") : record.at("config");
        config = config_from_json(cfg);
        config.workers = flags.workers;
    } else {
        config = build_config(flags);
    }
    validate_or_usage(config);

    const std::string started = utc_now();
    const EvolutionResult result = evolve(config);
    const std::string finished = utc_now();

    if (format == "csv") {
        emit(history_to_csv(result), out_path, out);
    } else {
        const EntanglementReport best = total_entanglement(run_circuit(result.circuit, zero_state(config.num_qubits)));
        json record = {
            {"tool", "entangler"},
            {"version", kVersion},
            {"command", command},
            {"started_at", started},
            {"finished_at", finished},
            {"result", result_to_json(result)},
            {"entanglement", report_to_json(best)},
            {"bound", max_entanglement_bound(config.num_qubits)},
        };
        emit(record.dump(2) + "\n", out_path, out);
    }
    err << "best E_N " << format_number(result.best_fitness) << " after " << result.history.back().generation
        << " generations (" << result.evaluations << " evaluations): " << format_circuit(result.circuit) << '\n';

    if (config.target_fitness && !result.target_reached) return kTargetMissed;
    return kOk;
}

int cmd_sweep(const GaFlags &flags, const std::vector<std::size_t> &lengths, const std::string &format,
              const std::string &out_path, std::ostream &out) {
    GaFlags f = flags;
    if (lengths.empty()) throw UsageError("--lengths needs at least one value");
    f.length = lengths.front();
    GAConfig config = build_config(f);
    for (std::size_t length : lengths) {
        GAConfig probe = config;
        probe.circuit_length = length;
        validate_or_usage(probe);
    }
    const auto points = length_sweep(config, lengths);
    std::ostringstream text;
    if (format == "json") {
        json rows = json::array();
        for (const auto &p : points) {
            rows.push_back({{"length", p.length},
                            {"seed", p.seed},
                            {"best_fitness", round_significant(p.result.best_fitness)},
                            {"target_reached", p.result.target_reached},
                            {"circuit", format_circuit(p.result.circuit)}});
        }
        json j = {{"master_seed", config.rng_seed}, {"config", config_to_json(config)}, {"points", rows}};
        text << j.dump(2) << '\n';
    } else {
        text << "length,seed,best_fitness,target_reached,circuit\n";
        for (const auto &p : points) {
            text << p.length << ',' << p.seed << ',' << format_number(p.result.best_fitness) << ','
                 << (p.result.target_reached ? "true" : "false") << ",\"" << format_circuit(p.result.circuit)
                 << "\"\n";
        }
    }
    emit(text.str(), out_path, out);
    return kOk;
}

int cmd_catalog_list(std::ostream &out) {
    out << "name,kind,qubits,expected_entanglement,description\n";
    for (const auto &e : catalog_entries()) {
        out << e.name << ',' << (e.kind == EntryKind::kCircuit ? "circuit" : "state") << ',' << e.num_qubits << ','
            << (e.expected_entanglement ? format_number(*e.expected_entanglement) : "") << ",\"" << e.description
            << "\"\n";
    }
    return kOk;
}

int cmd_catalog_show(const std::string &name, bool paper_order, bool all_amplitudes, std::ostream &out) {
    if (name.starts_with("circuit_")) {
        const Circuit c = named_circuit(name);
        out << format_circuit(c, paper_order ? GateOrder::kProduct : GateOrder::kApplication) << '\n';
        return kOk;
    }
    out << amplitude_csv(named_state(name), all_amplitudes);
    return kOk;
}

}  // namespace

std::map<std::string, std::string> read_flat_config(const std::string &path) {
    std::istringstream in(read_file(path));
    std::map<std::string, std::string> entries;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(number) + ": expected 'key = value'");
        }
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Evolve and analyze quantum circuits that maximize multipartite negativity"};
    app.name(raw_args.empty() ? "entangler" : raw_args[0]);
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_version_flag("--version", std::string(kVersion));

    GaFlags evolve_flags;
    std::string evolve_format = "json";
    std::string evolve_out;
    std::string replay;
    auto *evolve_cmd = app.add_subcommand("evolve", "Run the genetic algorithm and write a run record");
    add_ga_options(evolve_cmd, evolve_flags);
    evolve_cmd->add_option("--format", evolve_format, "json (run record) or csv (fitness history)")
        ->check(CLI::IsMember({"json", "csv"}));
    evolve_cmd->add_option("--out,-o", evolve_out, "Output path (default stdout)");
    evolve_cmd->add_option("--replay", replay, "Re-run the config stored in a JSON run record");

    GaFlags sweep_flags;
    std::vector<std::size_t> lengths;
    std::string sweep_format = "csv";
    std::string sweep_out;
    auto *sweep_cmd = app.add_subcommand("sweep", "Evolve once per circuit length with derived seeds");
    add_ga_options(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--lengths", lengths, "Comma-separated circuit lengths")->delimiter(',')->required();
    sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--out,-o", sweep_out, "Output path (default stdout)");

    SourceFlags eval_src;
    std::string eval_format = "text";
    bool dump_state = false;
    bool validate = false;
    bool eval_paper_order = false;
    auto *eval_cmd = app.add_subcommand("evaluate", "Report E_N and the per-cut breakdown of a circuit or state");
    add_source_options(eval_cmd, eval_src);
    eval_cmd->add_option("--format", eval_format)->check(CLI::IsMember({"text", "json", "csv"}));
    eval_cmd->add_flag("--state", dump_state, "Also print all amplitudes");
    eval_cmd->add_flag("--validate", validate, "Cross-check against the explicit partial-transpose spectrum");
    eval_cmd->add_flag("--paper-order", eval_paper_order, "Print the circuit in product (rightmost-first) order");

    SourceFlags trace_src;
    std::string trace_format = "csv";
    std::string trace_out;
    auto *trace_cmd = app.add_subcommand("trace", "E_N after each gate of a circuit");
    add_source_options(trace_cmd, trace_src);
    trace_cmd->add_option("--format", trace_format)->check(CLI::IsMember({"json", "csv"}));
    trace_cmd->add_option("--out,-o", trace_out, "Output path (default stdout)");

    auto *catalog_cmd = app.add_subcommand("catalog", "Named circuits and states");
    catalog_cmd->require_subcommand(1);
    auto *list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
    std::string show_name;
    bool show_paper_order = false;
    bool show_all = false;
    auto *show_cmd = catalog_cmd->add_subcommand("show", "Print a circuit or an amplitude table");
    show_cmd->add_option("name", show_name)->required();
    show_cmd->add_flag("--paper-order", show_paper_order, "Print circuits in product (rightmost-first) order");
    show_cmd->add_flag("--all", show_all, "Include zero amplitudes");

    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*evolve_cmd) return cmd_evolve(evolve_flags, replay, evolve_format, evolve_out, raw_args, out, err);
        if (*sweep_cmd) return cmd_sweep(sweep_flags, lengths, sweep_format, sweep_out, out);
        if (*eval_cmd) return cmd_evaluate(eval_src, eval_format, dump_state, validate, eval_paper_order, out);
        if (*trace_cmd) return cmd_trace(trace_src, trace_format, trace_out, out);
        if (*list_cmd) return cmd_catalog_list(out);
        if (*show_cmd) return cmd_catalog_show(show_name, show_paper_order, show_all, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const SourceParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kDataError;
    } catch (const LookupError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kUsage;
}

}  // namespace entangler::cli
