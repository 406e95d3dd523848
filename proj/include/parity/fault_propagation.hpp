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
#include <set>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/compiler.hpp"
#include "parity/layout.hpp"
#include "parity/statevector.hpp"

namespace parity {

/// A single X fault inserted before gate `position` (position == size means
/// after the last gate).
struct Injection {
    size_t position = 0;
    QubitId qubit;
};

/// Propagates an X frame through the rest of the circuit. CNOT copies X from
/// control to target; rotations about X and X gates leave the frame alone.
/// Returns the flip set after the last gate, and whether the frame ever
/// covered `watch`.
inline std::pair<std::set<QubitId>, bool> propagate_x(const Circuit &c, const Injection &inj, const QubitId &watch) {
    std::set<QubitId> frame{inj.qubit};
    bool hit = inj.qubit == watch;
    for (size_t g = inj.position; g < c.gates.size(); g++) {
        const auto &gate = c.gates[g];
        switch (gate.kind) {
            case GateKind::CNOT:
                if (frame.count(gate.q0)) {
                    if (!frame.erase(gate.q1)) {
                        frame.insert(gate.q1);
                    }
                }
                break;
            case GateKind::RX:
            case GateKind::X:
                break;
            default:
                throw std::invalid_argument(std::string("X propagation does not support ") + gate_name(gate.kind));
        }
        hit = hit || frame.count(watch) > 0;
    }
    return {frame, hit};
}

struct InjectionResult {
    Injection injection;
    std::vector<QubitId> flips;  // final pattern, ordered along the line path
    bool center_hit = false;
    bool contiguous = false;     // flips form one run of consecutive path entries
};

struct ChainReport {
    int logical_index = 0;
    QubitId site;
    Circuit circuit;
    std::vector<InjectionResult> results;
};

/// Injects a single X at every position of the R~x lowering of `line`, on
/// every qubit of the line, and records how it spreads.
inline ChainReport chain_error_locality_check(const Layout &layout, const LogicalLine &line, double angle = 0.37) {
    const auto &path = line.path;
    ChainReport report;
    report.logical_index = line.logical_index;
    report.site = path[center_position(layout.n())];
    report.circuit = compile_rx(layout, line.logical_index, angle).physical;
    for (size_t pos = 0; pos <= report.circuit.gates.size(); pos++) {
        for (const auto &q : path) {
            Injection inj{pos, q};
            auto [frame, hit] = propagate_x(report.circuit, inj, report.site);
            InjectionResult r{inj, {}, hit, false};
            std::vector<size_t> idx;
            for (size_t k = 0; k < path.size(); k++) {
                if (frame.count(path[k])) {
                    r.flips.push_back(path[k]);
                    idx.push_back(k);
                }
            }
            r.contiguous = !idx.empty() && idx.back() - idx.front() + 1 == idx.size();
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

/// Inserts X(inj.qubit) into a copy of the circuit.
inline Circuit with_fault(const Circuit &c, const Injection &inj) {
    Circuit out = c;
    out.gates.insert(out.gates.begin() + static_cast<std::ptrdiff_t>(inj.position), PhysicalGate::x(inj.qubit));
    return out;
}

/// Simulator cross-check: the faulty circuit equals the clean circuit followed
/// by X on every qubit of `flips`, up to global phase. Returns the max matrix
/// deviation.
inline double fault_pattern_deviation(const Circuit &c, const Injection &inj, const std::vector<QubitId> &flips) {
    Circuit faulty = with_fault(c, inj);
    Circuit expected = c;
    for (const auto &q : flips) {
        expected.push(PhysicalGate::x(q));
    }
    auto reg = Register::compact(faulty);
    return max_deviation_up_to_phase(unitary_of(faulty, reg), unitary_of(expected, reg));
}

}  // namespace parity
