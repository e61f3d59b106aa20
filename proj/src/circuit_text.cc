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

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "entangler/errors.h"

namespace entangler {

ParseError::ParseError(const std::string &message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

class Cursor {
   public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    /// Consumes characters while `pred` holds.
    template <typename Pred>
    std::string_view take_while(Pred pred) {
        const std::size_t start = pos_;
        while (!done() && pred(text_[pos_])) advance();
        return text_.substr(start, pos_ - start);
    }

    /// Raw text from `start` up to the next ';' or end of line, for error messages.
    std::string_view token_from(std::size_t start) const {
        std::size_t end = start;
        while (end < text_.size() && text_[end] != ';' && text_[end] != '\n') ++end;
        while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
        return text_.substr(start, end - start);
    }

    std::size_t pos() const { return pos_; }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct ParsedGate {
    Gate gate;
    std::size_t line;
    std::size_t column;
};

ParsedGate parse_gate(Cursor &cur) {
    const std::size_t line = cur.line();
    const std::size_t column = cur.column();
    const std::size_t start = cur.pos();
    auto fail = [&](const std::string &why) -> ParseError {
        return ParseError(why + " in gate '" + std::string(cur.token_from(start)) + "'", line, column);
    };

    const std::string_view name = cur.take_while([](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
    if (name.empty()) throw fail("expected a gate name");
    GateKind kind;
    try {
        kind = gate_kind_from_name(name);
    } catch (const ArgumentError &) {
        throw fail("unknown gate kind '" + std::string(name) + "'");
    }

    cur.skip_space();
    if (cur.peek() != '(') throw fail("expected '('");
    cur.advance();

    std::vector<std::uint32_t> labels;
    while (true) {
        cur.skip_space();
        const std::string_view digits =
            cur.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (digits.empty()) throw fail("expected a qubit label");
        if (digits.size() > 5) throw fail("qubit label too large");
        labels.push_back(static_cast<std::uint32_t>(std::stoul(std::string(digits))));
        cur.skip_space();
        if (cur.peek() == ',') {
            cur.advance();
            continue;
        }
        if (cur.peek() == ')') {
            cur.advance();
            break;
        }
        throw fail("expected ',' or ')'");
    }

    if (labels.size() != gate_arity(kind)) {
        throw fail(std::string(name) + " takes " + std::to_string(gate_arity(kind)) + " qubit label(s), got " +
                   std::to_string(labels.size()));
    }
    if (labels.size() == 2 && labels[0] == labels[1]) throw fail("qubit labels must be distinct");
    Gate gate = labels.size() == 1 ? Gate::single(kind, labels[0]) : Gate::pair(kind, labels[0], labels[1]);
    return {gate, line, column};
}

}  // namespace

Circuit parse_circuit(std::string_view text, std::optional<std::size_t> num_qubits, std::size_t min_qubits) {
    Cursor cur(text);
    std::vector<ParsedGate> parsed;
    cur.skip_space();
    while (!cur.done()) {
        parsed.push_back(parse_gate(cur));
        cur.skip_space();
        if (cur.done()) break;
        if (cur.peek() != ';') {
            throw ParseError(std::string("expected ';' between gates, found '") + cur.peek() + "'", cur.line(),
                             cur.column());
        }
        cur.advance();
        cur.skip_space();
    }

    Circuit circuit;
    std::size_t inferred = min_qubits;
    for (const auto &p : parsed) {
        inferred = std::max<std::size_t>(inferred, p.gate.first + 1);
        if (gate_arity(p.gate.kind) == 2) inferred = std::max<std::size_t>(inferred, p.gate.second + 1);
    }
    circuit.num_qubits = num_qubits.value_or(inferred);
    for (const auto &p : parsed) {
        try {
            p.gate.validate(circuit.num_qubits);
        } catch (const ArgumentError &e) {
            throw ParseError(std::string(e.what()) + " in gate '" + format_gate(p.gate) + "'", p.line, p.column);
        }
        circuit.gates.push_back(p.gate);
    }
    return circuit;
}

std::string format_gate(const Gate &gate) {
    std::string out(gate_kind_name(gate.kind));
    out += '(';
    out += std::to_string(gate.first);
    if (gate_arity(gate.kind) == 2) {
        out += ',';
        out += std::to_string(gate.second);
    }
    out += ')';
    return out;
}

std::string format_circuit(const Circuit &circuit, GateOrder order) {
    std::string out;
    if (order == GateOrder::kApplication) {
        for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
            if (i) out += "; ";
            out += format_gate(circuit.gates[i]);
        }
    } else {
        for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) out += format_gate(*it);
    }
    return out;
}

}  // namespace entangler
