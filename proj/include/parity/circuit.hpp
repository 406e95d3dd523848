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

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/layout.hpp"

namespace parity {

enum class GateKind : std::uint8_t { CNOT, RX, RZ, X, H, INIT0, MEASURE_Z };

inline const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::RX:
            return "RX";
        case GateKind::RZ:
            return "RZ";
        case GateKind::X:
            return "X";
        case GateKind::H:
            return "H";
        case GateKind::INIT0:
            return "INIT0";
        case GateKind::MEASURE_Z:
            return "MEASURE_Z";
    }
    return "?";
}

inline GateKind parse_gate_kind(const std::string &name) {
    static const std::map<std::string, GateKind> table = {
        {"CNOT", GateKind::CNOT}, {"CX", GateKind::CNOT},       {"RX", GateKind::RX},
        {"RZ", GateKind::RZ},     {"X", GateKind::X},           {"H", GateKind::H},
        {"INIT0", GateKind::INIT0}, {"MEASURE_Z", GateKind::MEASURE_Z}, {"MZ", GateKind::MEASURE_Z},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown physical gate kind '" + name + "'");
    }
    return it->second;
}

inline bool has_angle(GateKind kind) { return kind == GateKind::RX || kind == GateKind::RZ; }
inline bool is_unitary(GateKind kind) { return kind != GateKind::INIT0 && kind != GateKind::MEASURE_Z; }

/// A physical operation. For CNOT, `q0` is the control and `q1` the target.
///
/// Rotation conventions: RZ(t) = diag(e^{-it/2}, e^{+it/2}) and
/// RX(t) = exp(-i t/2 X).
struct PhysicalGate {
    GateKind kind = GateKind::X;
    QubitId q0;
    QubitId q1;
    double angle = 0.0;

    static PhysicalGate cnot(QubitId control, QubitId target) {
        if (control == target) {
            throw std::invalid_argument("CNOT control and target coincide: " + control.str());
        }
        return {GateKind::CNOT, control, target, 0.0};
    }
    static PhysicalGate rx(QubitId q, double angle) { return {GateKind::RX, q, {}, angle}; }
    static PhysicalGate rz(QubitId q, double angle) { return {GateKind::RZ, q, {}, angle}; }
    static PhysicalGate x(QubitId q) { return {GateKind::X, q, {}, 0.0}; }
    static PhysicalGate h(QubitId q) { return {GateKind::H, q, {}, 0.0}; }
    static PhysicalGate init0(QubitId q) { return {GateKind::INIT0, q, {}, 0.0}; }
    static PhysicalGate measure_z(QubitId q) { return {GateKind::MEASURE_Z, q, {}, 0.0}; }

    int arity() const { return kind == GateKind::CNOT ? 2 : 1; }
    bool is_two_qubit() const { return kind == GateKind::CNOT; }
    bool is_single_qubit_unitary() const { return arity() == 1 && is_unitary(kind); }

    bool touches(const QubitId &q) const { return q0 == q || (arity() == 2 && q1 == q); }

    bool operator==(const PhysicalGate &) const = default;

    std::string str() const {
        std::string out = gate_name(kind);
        out += ' ';
        out += q0.str();
        if (arity() == 2) {
            out += ' ';
            out += q1.str();
        }
        if (has_angle(kind)) {
            out += ' ';
            out += std::to_string(angle);
        }
        return out;
    }
};

/// Gate list over the physical qubits of an n-logical-qubit layout.
struct Circuit {
    int n = 2;
    std::vector<PhysicalGate> gates;
    std::string name;

    Circuit() = default;
    explicit Circuit(int n_, std::string name_ = {}) : n(n_), name(std::move(name_)) {}

    void push(const PhysicalGate &g) { gates.push_back(g); }
    void append(const Circuit &other) { gates.insert(gates.end(), other.gates.begin(), other.gates.end()); }
    size_t size() const { return gates.size(); }
    bool empty() const { return gates.empty(); }

    size_t count(GateKind kind) const {
        return static_cast<size_t>(
            std::count_if(gates.begin(), gates.end(), [&](const PhysicalGate &g) { return g.kind == kind; }));
    }

    bool is_unitary() const {
        return std::all_of(gates.begin(), gates.end(), [](const PhysicalGate &g) { return parity::is_unitary(g.kind); });
    }
};

/// Throws when an operand is missing from the layout (ancillas must name an
/// existing constraint).
inline void validate_operands(const Circuit &c, const Layout &layout) {
    if (c.n != layout.n()) {
        throw std::invalid_argument("circuit is declared for n=" + std::to_string(c.n) + " but layout has n=" +
                                    std::to_string(layout.n()));
    }
    for (const auto &g : c.gates) {
        layout.require(g.q0);
        if (g.arity() == 2) {
            layout.require(g.q1);
            if (g.q0 == g.q1) {
                throw std::invalid_argument("CNOT control and target coincide: " + g.q0.str());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Logical circuits.

enum class LogicalKind : std::uint8_t { RX, RZ, X, CP, CZ, CNOT, U, H };

inline const char *logical_name(LogicalKind kind) {
    switch (kind) {
        case LogicalKind::RX:
            return "RX";
        case LogicalKind::RZ:
            return "RZ";
        case LogicalKind::X:
            return "X";
        case LogicalKind::CP:
            return "CP";
        case LogicalKind::CZ:
            return "CZ";
        case LogicalKind::CNOT:
            return "CNOT";
        case LogicalKind::U:
            return "U";
        case LogicalKind::H:
            return "H";
    }
    return "?";
}

inline LogicalKind parse_logical_kind(const std::string &name) {
    static const std::map<std::string, LogicalKind> table = {
        {"RX", LogicalKind::RX}, {"RZ", LogicalKind::RZ},     {"X", LogicalKind::X},
        {"CP", LogicalKind::CP}, {"CZ", LogicalKind::CZ},     {"CNOT", LogicalKind::CNOT},
        {"CX", LogicalKind::CNOT}, {"U", LogicalKind::U},     {"H", LogicalKind::H},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown logical gate kind '" + name + "'");
    }
    return it->second;
}

inline int logical_arity(LogicalKind kind) {
    return (kind == LogicalKind::CP || kind == LogicalKind::CZ || kind == LogicalKind::CNOT) ? 2 : 1;
}

inline int logical_angle_count(LogicalKind kind) {
    switch (kind) {
        case LogicalKind::RX:
        case LogicalKind::RZ:
        case LogicalKind::CP:
            return 1;
        case LogicalKind::U:
            return 3;
        default:
            return 0;
    }
}

/// Gate on logical qubits. U(alpha, beta, gamma) = Rz(alpha) Rx(beta) Rz(gamma);
/// for CNOT the first target is the control.
struct LogicalGate {
    LogicalKind kind = LogicalKind::X;
    std::array<int, 2> targets{0, -1};
    std::array<double, 3> angles{0.0, 0.0, 0.0};

    static LogicalGate rx(int i, double a) { return {LogicalKind::RX, {i, -1}, {a, 0, 0}}; }
    static LogicalGate rz(int i, double a) { return {LogicalKind::RZ, {i, -1}, {a, 0, 0}}; }
    static LogicalGate x(int i) { return {LogicalKind::X, {i, -1}, {}}; }
    static LogicalGate h(int i) { return {LogicalKind::H, {i, -1}, {}}; }
    static LogicalGate u(int i, double alpha, double beta, double gamma) {
        return {LogicalKind::U, {i, -1}, {alpha, beta, gamma}};
    }
    static LogicalGate cp(int i, int j, double phi) { return checked({LogicalKind::CP, {i, j}, {phi, 0, 0}}); }
    static LogicalGate cz(int i, int j) { return checked({LogicalKind::CZ, {i, j}, {}}); }
    static LogicalGate cnot(int c, int t) { return checked({LogicalKind::CNOT, {c, t}, {}}); }

    int arity() const { return logical_arity(kind); }

    static LogicalGate checked(LogicalGate g) {
        if (g.arity() == 2 && g.targets[0] == g.targets[1]) {
            throw std::invalid_argument(std::string(logical_name(g.kind)) + " needs two distinct logical qubits");
        }
        return g;
    }

    bool operator==(const LogicalGate &) const = default;
};

struct LogicalCircuit {
    int n = 2;
    std::vector<LogicalGate> gates;
    std::string name;

    void validate() const {
        if (n < 2) {
            throw std::invalid_argument("logical circuit needs n >= 2");
        }
        for (const auto &g : gates) {
            for (int k = 0; k < g.arity(); k++) {
                if (g.targets[k] < 0 || g.targets[k] >= n) {
                    throw std::out_of_range(std::string(logical_name(g.kind)) + " operand " +
                                            std::to_string(g.targets[k]) + " out of range for n=" + std::to_string(n));
                }
            }
            LogicalGate::checked(g);
        }
    }
};

// ---------------------------------------------------------------------------
// Scheduling and resource counting.

struct Schedule {
    std::vector<std::vector<size_t>> layers;
    int depth() const { return static_cast<int>(layers.size()); }
};

/// Greedy ASAP layering in gate order: every gate lands one layer after the
/// latest earlier gate sharing an operand.
inline Schedule schedule(const Circuit &c) {
    Schedule out;
    std::map<QubitId, int> ready;  // first free layer per qubit
    for (size_t k = 0; k < c.gates.size(); k++) {
        const auto &g = c.gates[k];
        int layer = ready[g.q0];
        if (g.arity() == 2) {
            layer = std::max(layer, ready[g.q1]);
        }
        if (static_cast<size_t>(layer) == out.layers.size()) {
            out.layers.emplace_back();
        }
        out.layers[layer].push_back(k);
        ready[g.q0] = layer + 1;
        if (g.arity() == 2) {
            ready[g.q1] = layer + 1;
        }
    }
    return out;
}

/// ASAP depth where a run of consecutive single-qubit gates on one qubit
/// occupies a single time step.
inline int merged_depth(const Circuit &c) {
    struct State {
        int ready = 0;
        bool in_1q_run = false;
    };
    std::map<QubitId, State> state;
    int depth = 0;
    for (const auto &g : c.gates) {
        if (g.arity() == 1) {
            auto &s = state[g.q0];
            if (!s.in_1q_run) {
                s.ready += 1;
                s.in_1q_run = true;
            }
            depth = std::max(depth, s.ready);
            continue;
        }
        auto &a = state[g.q0];
        auto &b = state[g.q1];
        int layer = std::max(a.ready, b.ready) + 1;
        a = {layer, false};
        b = {layer, false};
        depth = std::max(depth, layer);
    }
    return depth;
}

struct ResourceCount {
    int single_qubit = 0;
    int two_qubit = 0;
    int depth = 0;
    int raw_depth = 0;
    bool operator==(const ResourceCount &) const = default;
};

/// Counts unitary operations. With `merge_1q`, consecutive rotations of the
/// same kind on one qubit count as one gate (they fuse into a single
/// rotation), and `depth` uses the merged time-step metric.
inline ResourceCount count_resources(const Circuit &c, bool merge_1q = true) {
    ResourceCount r;
    std::map<QubitId, const PhysicalGate *> last;
    for (const auto &g : c.gates) {
        if (!is_unitary(g.kind)) {
            last.erase(g.q0);
            continue;
        }
        if (g.is_two_qubit()) {
            r.two_qubit++;
            last.erase(g.q0);
            last.erase(g.q1);
            continue;
        }
        auto it = last.find(g.q0);
        bool fuses = merge_1q && it != last.end() && it->second->kind == g.kind;
        if (!fuses) {
            r.single_qubit++;
        }
        last[g.q0] = &g;
    }
    r.raw_depth = schedule(c).depth();
    r.depth = merge_1q ? merged_depth(c) : r.raw_depth;
    return r;
}

struct LocalityViolation {
    size_t gate_index = 0;
    PhysicalGate gate;
};

/// Every two-qubit gate whose operands are not lattice neighbors.
inline std::vector<LocalityViolation> validate_locality(const Circuit &c, const Layout &layout) {
    std::vector<LocalityViolation> out;
    for (size_t k = 0; k < c.gates.size(); k++) {
        const auto &g = c.gates[k];
        if (g.is_two_qubit() && !layout.are_neighbors(g.q0, g.q1)) {
            out.push_back({k, g});
        }
    }
    return out;
}

/// Reversed gate list with every gate inverted.
inline Circuit invert(const Circuit &c) {
    Circuit out(c.n, c.name.empty() ? std::string{} : c.name + "^-1");
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        if (!is_unitary(it->kind)) {
            throw std::invalid_argument(std::string("cannot invert non-unitary gate ") + gate_name(it->kind));
        }
        PhysicalGate g = *it;
        if (has_angle(g.kind)) {
            g.angle = -g.angle;
        }
        out.gates.push_back(g);
    }
    return out;
}

}  // namespace parity
