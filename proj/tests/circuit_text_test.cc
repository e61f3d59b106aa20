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

#include "entangler/circuit_text.h"

#include <gtest/gtest.h>

#include "entangler/catalog.h"
#include "entangler/errors.h"

namespace entangler {
namespace {

TEST(ParseCircuit, GhzThree) {
    const Circuit c = parse_circuit("H(2); CNOT(2,1); CNOT(2,0)");
    EXPECT_EQ(c.num_qubits, 3u);
    ASSERT_EQ(c.gates.size(), 3u);
    EXPECT_EQ(c.gates[0], Gate::single(GateKind::H, 2));
    EXPECT_EQ(c.gates[1], Gate::pair(GateKind::CNOT, 2, 1));
    EXPECT_EQ(c.gates[2], Gate::pair(GateKind::CNOT, 2, 0));
    EXPECT_EQ(c, ghz_circuit(3));
}

TEST(ParseCircuit, WhitespaceCommentsAndTrailingSeparator) {
    const Circuit c = parse_circuit("# ghz\n  H( 1 ) ;\n\tCZ(1, 0);  # fan out\n");
    EXPECT_EQ(c.num_qubits, 2u);
    ASSERT_EQ(c.gates.size(), 2u);
    EXPECT_EQ(c.gates[1], Gate::pair(GateKind::CZ, 1, 0));
}

TEST(ParseCircuit, QubitCount) {
    EXPECT_EQ(parse_circuit("X(0)", 5).num_qubits, 5u);
    EXPECT_EQ(parse_circuit("", std::nullopt, 2).num_qubits, 2u);
    EXPECT_EQ(parse_circuit("X(0)", std::nullopt, 3).num_qubits, 3u);
    EXPECT_TRUE(parse_circuit("   ", std::nullopt, 2).gates.empty());
}

struct BadInput {
    const char *text;
    std::size_t line;
    std::size_t column;
    const char *needle;
};

class ParseErrors : public testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportsPosition) {
    const BadInput &bad = GetParam();
    try {
        parse_circuit(bad.text, bad.line == 99 ? std::optional<std::size_t>(2) : std::nullopt);
        FAIL() << "expected ParseError for " << bad.text;
    } catch (const ParseError &e) {
        if (bad.line != 99) {
            EXPECT_EQ(e.line, bad.line);
            EXPECT_EQ(e.column, bad.column);
        }
        EXPECT_NE(std::string(e.what()).find(bad.needle), std::string::npos) << e.what();
    }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParseErrors,
    testing::Values(BadInput{"CNOT(1)", 1, 1, "CNOT(1)"}, BadInput{"H(0); CNOT(1)", 1, 7, "CNOT(1)"},
                    BadInput{"H(0);\n  FOO(1)", 2, 3, "FOO"}, BadInput{"H(0,1)", 1, 1, "H(0,1)"},
                    BadInput{"cnot(0,1)", 1, 1, "cnot"}, BadInput{"CNOT(1,1)", 1, 1, "CNOT(1,1)"},
                    BadInput{"H(0) H(1)", 1, 6, "H"}, BadInput{"H(x)", 1, 1, "H(x)"},
                    BadInput{"H(0", 1, 1, "H(0"}, BadInput{"H(5)", 99, 0, "H(5)"}));

TEST(FormatCircuit, ApplicationAndProductOrder) {
    const Circuit c = named_circuit("circuit_4a");
    EXPECT_EQ(format_circuit(c), "H(2); CNOT(2,1); H(3); CNOT(3,0); CNOT(3,1)");
    EXPECT_EQ(format_circuit(c, GateOrder::kProduct), "CNOT(3,1)CNOT(3,0)H(3)CNOT(2,1)H(2)");
    EXPECT_EQ(format_circuit(ghz_circuit(3), GateOrder::kProduct), "CNOT(2,0)CNOT(2,1)H(2)");
    EXPECT_EQ(format_circuit(Circuit{2, {}}), "");
}

TEST(FormatCircuit, RoundTripOnCatalog) {
    for (const auto &entry : catalog_entries()) {
        if (entry.kind != EntryKind::kCircuit) continue;
        const Circuit c = named_circuit(entry.name);
        EXPECT_EQ(parse_circuit(format_circuit(c), c.num_qubits), c) << entry.name;
    }
}

}  // namespace
}  // namespace entangler
