// Copyright 2026 The Parity Compiler Authors
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

#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "parity/circuit.hpp"
#include "parity/layout.hpp"

namespace parity {

/// Malformed input: carries a location prefix (line number or JSON path).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

enum class CircuitSpace { Logical, Physical };

inline std::string format_angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Circuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates) {
        Json ops = Json::array({g.q0.str()});
        if (g.arity() == 2) {
            ops.push_back(g.q1.str());
        }
        Json jg = {{"kind", gate_name(g.kind)}, {"operands", ops}};
        if (has_angle(g.kind)) {
            jg["angle"] = g.angle;
        }
        gates.push_back(std::move(jg));
    }
    Json out = {{"space", "physical"}, {"n", c.n}, {"gates", std::move(gates)}};
    if (!c.name.empty()) {
        out["name"] = c.name;
    }
    return out;
}

inline Json to_json(const LogicalCircuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates) {
        Json ops = Json::array();
        for (int k = 0; k < g.arity(); k++) {
            ops.push_back(g.targets[k]);
        }
        Json jg = {{"kind", logical_name(g.kind)}, {"operands", ops}};
        int na = logical_angle_count(g.kind);
        if (na == 1) {
            jg["angle"] = g.angles[0];
        } else if (na == 3) {
            jg["angles"] = {g.angles[0], g.angles[1], g.angles[2]};
        }
        gates.push_back(std::move(jg));
    }
    Json out = {{"space", "logical"}, {"n", c.n}, {"gates", std::move(gates)}};
    if (!c.name.empty()) {
        out["name"] = c.name;
    }
    return out;
}

namespace detail {

inline Json parse_json_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline const Json &field(const Json &obj, const std::string &key, const std::string &where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

inline int int_field(const Json &obj, const std::string &key, const std::string &where) {
    const auto &v = field(obj, key, where);
    if (!v.is_number_integer()) {
        throw ParseError(where + "." + key + ": expected an integer");
    }
    return v.get<int>();
}

inline double number(const Json &v, const std::string &where) {
    if (!v.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    return v.get<double>();
}

inline std::string string_field(const Json &obj, const std::string &key, const std::string &where) {
    const auto &v = field(obj, key, where);
    if (!v.is_string()) {
        throw ParseError(where + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

}  // namespace detail

inline CircuitSpace circuit_space(const Json &j) {
    auto space = detail::string_field(j, "space", "circuit");
    if (space == "logical") {
        return CircuitSpace::Logical;
    }
    if (space == "physical") {
        return CircuitSpace::Physical;
    }
    throw ParseError("circuit.space: expected \"logical\" or \"physical\", got \"" + space + "\"");
}

inline Circuit physical_from_json(const Json &j) {
    if (circuit_space(j) != CircuitSpace::Physical) {
        throw ParseError("circuit.space: expected a physical circuit");
    }
    Circuit c(detail::int_field(j, "n", "circuit"));
    if (j.contains("name") && j["name"].is_string()) {
        c.name = j["name"].get<std::string>();
    }
    const auto &gates = detail::field(j, "gates", "circuit");
    if (!gates.is_array()) {
        throw ParseError("circuit.gates: expected an array");
    }
    for (size_t k = 0; k < gates.size(); k++) {
        std::string where = "gates[" + std::to_string(k) + "]";
        const auto &jg = gates[k];
        try {
            GateKind kind = parse_gate_kind(detail::string_field(jg, "kind", where));
            const auto &ops = detail::field(jg, "operands", where);
            int arity = kind == GateKind::CNOT ? 2 : 1;
            if (!ops.is_array() || static_cast<int>(ops.size()) != arity) {
                throw ParseError(where + ".operands: expected " + std::to_string(arity) + " qubit label(s)");
            }
            std::vector<QubitId> qs;
            for (const auto &o : ops) {
                if (!o.is_string()) {
                    throw ParseError(where + ".operands: expected qubit labels such as \"d0\" or \"p0_1\"");
                }
                qs.push_back(parse_qubit(o.get<std::string>()));
            }
            PhysicalGate g{kind, qs[0], arity == 2 ? qs[1] : QubitId{}, 0.0};
            if (kind == GateKind::CNOT) {
                g = PhysicalGate::cnot(qs[0], qs[1]);
            }
            if (has_angle(kind)) {
                g.angle = detail::number(detail::field(jg, "angle", where), where + ".angle");
            }
            c.push(g);
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return c;
}

inline LogicalCircuit logical_from_json(const Json &j) {
    if (circuit_space(j) != CircuitSpace::Logical) {
        throw ParseError("circuit.space: expected a logical circuit");
    }
    LogicalCircuit c;
    c.n = detail::int_field(j, "n", "circuit");
    if (j.contains("name") && j["name"].is_string()) {
        c.name = j["name"].get<std::string>();
    }
    const auto &gates = detail::field(j, "gates", "circuit");
    if (!gates.is_array()) {
        throw ParseError("circuit.gates: expected an array");
    }
    for (size_t k = 0; k < gates.size(); k++) {
        std::string where = "gates[" + std::to_string(k) + "]";
        const auto &jg = gates[k];
        try {
            LogicalGate g;
            g.kind = parse_logical_kind(detail::string_field(jg, "kind", where));
            const auto &ops = detail::field(jg, "operands", where);
            if (!ops.is_array() || static_cast<int>(ops.size()) != g.arity()) {
                throw ParseError(where + ".operands: expected " + std::to_string(g.arity()) + " logical index(es)");
            }
            for (int q = 0; q < g.arity(); q++) {
                if (!ops[q].is_number_integer()) {
                    throw ParseError(where + ".operands: expected integer logical indices");
                }
                g.targets[q] = ops[q].get<int>();
            }
            int na = logical_angle_count(g.kind);
            if (na == 1) {
                g.angles[0] = detail::number(detail::field(jg, "angle", where), where + ".angle");
            } else if (na == 3) {
                const auto &as = detail::field(jg, "angles", where);
                if (!as.is_array() || as.size() != 3) {
                    throw ParseError(where + ".angles: expected [alpha, beta, gamma]");
                }
                for (int a = 0; a < 3; a++) {
                    g.angles[a] = detail::number(as[a], where + ".angles");
                }
            }
            c.gates.push_back(LogicalGate::checked(g));
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    try {
        c.validate();
    } catch (const std::exception &e) {
        throw ParseError(std::string("circuit: ") + e.what());
    }
    return c;
}

inline Circuit parse_physical_json(const std::string &text) { return physical_from_json(detail::parse_json_text(text)); }
inline LogicalCircuit parse_logical_json(const std::string &text) {
    return logical_from_json(detail::parse_json_text(text));
}

// ---------------------------------------------------------------------------
// Line-oriented text format. '#' starts a comment; an optional `n <N>`
// directive sets the width.

/// Writes one gate per line. `steps`, when given, groups gates under
/// "# step k" comments; it lists the number of gates in each step.
inline std::string to_text(const Circuit &c, const std::vector<size_t> &steps = {}) {
    std::ostringstream out;
    out << "n " << c.n << "\n";
    size_t next_step = 0, remaining = 0;
    for (const auto &g : c.gates) {
        while (remaining == 0 && next_step < steps.size()) {
            out << "# step " << next_step + 1 << "\n";
            remaining = steps[next_step++];
        }
        out << gate_name(g.kind) << ' ' << g.q0.str();
        if (g.arity() == 2) {
            out << ' ' << g.q1.str();
        }
        if (has_angle(g.kind)) {
            out << ' ' << format_angle(g.angle);
        }
        out << "\n";
        if (remaining > 0) {
            remaining--;
        }
    }
    return out.str();
}

inline std::string to_text(const LogicalCircuit &c) {
    std::ostringstream out;
    out << "n " << c.n << "\n";
    for (const auto &g : c.gates) {
        out << logical_name(g.kind);
        for (int k = 0; k < g.arity(); k++) {
            out << ' ' << g.targets[k];
        }
        for (int a = 0; a < logical_angle_count(g.kind); a++) {
            out << ' ' << format_angle(g.angles[a]);
        }
        out << "\n";
    }
    return out.str();
}

namespace detail {

inline std::vector<std::string> tokens_of(const std::string &line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

inline double parse_double(const std::string &tok, const std::string &where) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(where + ": bad number '" + tok + "'");
    }
}

inline int parse_int(const std::string &tok, const std::string &where) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(where + ": bad integer '" + tok + "'");
    }
}

}  // namespace detail

inline Circuit parse_physical_text(const std::string &text, int default_n = 2) {
    Circuit c(default_n);
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); lineno++) {
        auto tok = detail::tokens_of(line);
        if (tok.empty()) {
            continue;
        }
        std::string where = "line " + std::to_string(lineno);
        if (tok[0] == "n") {
            if (tok.size() != 2) {
                throw ParseError(where + ": expected 'n <count>'");
            }
            c.n = detail::parse_int(tok[1], where);
            continue;
        }
        try {
            GateKind kind = parse_gate_kind(tok[0]);
            size_t want = 1 + (kind == GateKind::CNOT ? 2 : 1) + (has_angle(kind) ? 1 : 0);
            if (tok.size() != want) {
                throw ParseError(where + ": " + gate_name(kind) + " expects " + std::to_string(want - 1) +
                                 " argument(s)");
            }
            if (kind == GateKind::CNOT) {
                c.push(PhysicalGate::cnot(parse_qubit(tok[1]), parse_qubit(tok[2])));
            } else {
                PhysicalGate g{kind, parse_qubit(tok[1]), {}, 0.0};
                if (has_angle(kind)) {
                    g.angle = detail::parse_double(tok[2], where);
                }
                c.push(g);
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return c;
}

inline LogicalCircuit parse_logical_text(const std::string &text, int default_n = 2) {
    LogicalCircuit c;
    c.n = default_n;
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); lineno++) {
        auto tok = detail::tokens_of(line);
        if (tok.empty()) {
            continue;
        }
        std::string where = "line " + std::to_string(lineno);
        if (tok[0] == "n") {
            if (tok.size() != 2) {
                throw ParseError(where + ": expected 'n <count>'");
            }
            c.n = detail::parse_int(tok[1], where);
            continue;
        }
        try {
            LogicalGate g;
            g.kind = parse_logical_kind(tok[0]);
            size_t want = 1 + g.arity() + logical_angle_count(g.kind);
            if (tok.size() != want) {
                throw ParseError(where + ": " + logical_name(g.kind) + " expects " + std::to_string(want - 1) +
                                 " argument(s)");
            }
            for (int k = 0; k < g.arity(); k++) {
                g.targets[k] = detail::parse_int(tok[1 + k], where);
            }
            for (int a = 0; a < logical_angle_count(g.kind); a++) {
                g.angles[a] = detail::parse_double(tok[1 + g.arity() + a], where);
            }
            c.gates.push_back(LogicalGate::checked(g));
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    try {
        c.validate();
    } catch (const std::exception &e) {
        throw ParseError(std::string("circuit: ") + e.what());
    }
    return c;
}

/// Accepts either format: text starting with '{' is JSON.
inline LogicalCircuit parse_logical(const std::string &text, int default_n = 2) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_logical_json(text);
    }
    return parse_logical_text(text, default_n);
}

inline Circuit parse_physical(const std::string &text, int default_n = 2) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_physical_json(text);
    }
    return parse_physical_text(text, default_n);
}

// ---------------------------------------------------------------------------
// Layout JSON

inline Json to_json(const Layout &layout) {
    Json qubits = Json::array();
    for (const auto &q : layout.qubits()) {
        auto xy = layout.coordinate(q);
        qubits.push_back({{"id", q.str()}, {"x", xy.x}, {"y", xy.y}});
    }
    Json constraints = Json::array();
    for (const auto &c : layout.constraints()) {
        Json members = Json::array();
        for (const auto &q : c.qubits) {
            members.push_back(q.str());
        }
        constraints.push_back({{"id", c.id}, {"qubits", members}, {"center", {c.center.x, c.center.y}}});
    }
    Json lines = Json::array();
    for (const auto &l : layout.lines()) {
        Json path = Json::array();
        for (const auto &q : l.path) {
            path.push_back(q.str());
        }
        lines.push_back({{"index", l.logical_index}, {"path", path}});
    }
    return {{"n", layout.n()},
            {"num_qubits", layout.num_qubits()},
            {"num_constraints", layout.constraints().size()},
            {"qubits", qubits},
            {"constraints", constraints},
            {"lines", lines}};
}

/// Reads a layout back and checks that every listed item agrees with the
/// layout rebuilt from n.
inline Layout layout_from_json(const Json &j) {
    int n = detail::int_field(j, "n", "layout");
    if (n < 2) {
        throw ParseError("layout.n: must be at least 2");
    }
    Layout layout(n);
    auto mismatch = [](const std::string &what) { throw ParseError("layout: " + what + " does not match n"); };
    try {
        const auto &qubits = detail::field(j, "qubits", "layout");
        if (!qubits.is_array() || qubits.size() != layout.qubits().size()) {
            mismatch("qubit list");
        }
        for (size_t k = 0; k < qubits.size(); k++) {
            auto q = parse_qubit(detail::string_field(qubits[k], "id", "layout.qubits"));
            Coordinate xy{detail::int_field(qubits[k], "x", "layout.qubits"),
                          detail::int_field(qubits[k], "y", "layout.qubits")};
            if (q != layout.qubits()[k] || !(xy == layout.coordinate(q))) {
                mismatch("qubit " + q.str());
            }
        }
        const auto &cons = detail::field(j, "constraints", "layout");
        if (!cons.is_array() || cons.size() != layout.constraints().size()) {
            mismatch("constraint list");
        }
        for (size_t k = 0; k < cons.size(); k++) {
            const auto &expect = layout.constraints()[k];
            std::vector<QubitId> members;
            for (const auto &m : detail::field(cons[k], "qubits", "layout.constraints")) {
                members.push_back(parse_qubit(m.get<std::string>()));
            }
            if (detail::int_field(cons[k], "id", "layout.constraints") != expect.id || members != expect.qubits) {
                mismatch("constraint " + std::to_string(k));
            }
        }
        const auto &lines = detail::field(j, "lines", "layout");
        if (!lines.is_array() || static_cast<int>(lines.size()) != n) {
            mismatch("line list");
        }
        for (size_t k = 0; k < lines.size(); k++) {
            std::vector<QubitId> path;
            for (const auto &m : detail::field(lines[k], "path", "layout.lines")) {
                path.push_back(parse_qubit(m.get<std::string>()));
            }
            if (path != layout.lines()[k].path) {
                mismatch("line " + std::to_string(k));
            }
        }
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &e) {
        throw ParseError(std::string("layout: ") + e.what());
    }
    return layout;
}

}  // namespace parity
