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

#include <string>
#include <vector>

#include <json.hpp>

#include "entangler/entanglement.h"
#include "entangler/evolve.h"

namespace entangler {

/// Rounds to 12 significant digits, the precision of every emitted number.
double round_significant(double value);
/// `value` printed with %.12g.
std::string format_number(double value);

/// {"n", "total", "per_cut": [{"mask", "members", "smaller_side", "contribution"}]}
nlohmann::json report_to_json(const EntanglementReport &report);
/// Header `mask,members,smaller_side,contribution`; members are space-separated.
std::string report_to_csv(const EntanglementReport &report);

/// Gate labels for trace rows; row 0 (the initial state) has label "init".
std::vector<std::string> trace_labels(const Circuit &circuit);
nlohmann::json trace_to_json(const Circuit &circuit, const std::vector<TraceStep> &trace);
/// Header `step,gate,entanglement`.
std::string trace_to_csv(const Circuit &circuit, const std::vector<TraceStep> &trace);

nlohmann::json config_to_json(const GAConfig &config);
/// Inverse of config_to_json; throws ArgumentError on missing or bad fields.
GAConfig config_from_json(const nlohmann::json &json);

/// Deterministic serialization: identical results give identical dumps.
nlohmann::json result_to_json(const EvolutionResult &result);
/// Header `generation,best,mean`.
std::string history_to_csv(const EvolutionResult &result);

}  // namespace entangler
