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

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/layout.hpp"

namespace parity {

enum class CodecDirection { Encode, Decode };

struct CodecPlan {
    Circuit circuit;
    CodecDirection direction = CodecDirection::Encode;
    std::set<QubitId> touched;
};

namespace detail {

inline CodecPlan make_plan(Circuit c, CodecDirection dir) {
    CodecPlan plan{std::move(c), dir, {}};
    for (const auto &g : plan.circuit.gates) {
        plan.touched.insert(g.q0);
        if (g.arity() == 2) {
            plan.touched.insert(g.q1);
        }
    }
    return plan;
}

}  // namespace detail

/// CNOT groups of the depth-(n+1) encoder, one entry per algorithm step.
///
/// Step 1 and 2 copy the data parities onto the first parity row, step 3
/// and 4 fill rows two and three, and step j+2 (3 <= j < n) walks the
/// remaining diagonals upward. The steps are emitted exactly as listed; the
/// parallel grouping is recovered by the scheduler.
inline std::vector<std::vector<PhysicalGate>> encode_steps(const Layout &layout) {
    const int n = layout.n();
    auto d = [](int i) { return QubitId::data(i); };
    auto p = [](int i, int j) { return QubitId::parity(i, j); };
    std::vector<std::vector<PhysicalGate>> steps;

    std::vector<PhysicalGate> step;
    for (int i = 0; i < n - 1; i++) {
        step.push_back(PhysicalGate::cnot(d(i), p(i, i + 1)));
    }
    steps.push_back(std::move(step));

    step = {};
    for (int i = 0; i < n - 1; i++) {
        step.push_back(PhysicalGate::cnot(d(i + 1), p(i, i + 1)));
    }
    steps.push_back(std::move(step));

    if (n < 3) {
        return steps;
    }

    step = {};
    for (int i = 1; i < n - 1; i++) {
        step.push_back(PhysicalGate::cnot(p(i, i + 1), p(i - 1, i + 1)));
    }
    steps.push_back(std::move(step));

    step = {PhysicalGate::cnot(p(0, 1), p(0, 2))};
    for (int i = 1; i < n - 2; i++) {
        step.push_back(PhysicalGate::cnot(p(i, i + 2), p(i - 1, i + 2)));
    }
    steps.push_back(std::move(step));

    for (int j = 3; j < n; j++) {
        step = {PhysicalGate::cnot(p(0, j - 1), p(0, j)), PhysicalGate::cnot(p(1, j - 1), p(1, j))};
        for (int i = 1; i < n - j; i++) {
            step.push_back(PhysicalGate::cnot(p(i + 1, i + j - 1), p(i + 1, i + j)));
            step.push_back(PhysicalGate::cnot(p(i, i + j), p(i - 1, i + j)));
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

/// Encodes the data qubits into the full chip, assuming every parity qubit
/// starts in |0>. n(n-1) nearest-neighbor CNOTs, depth n+1.
inline CodecPlan encode_full(const Layout &layout) {
    Circuit c(layout.n(), "encode");
    for (const auto &step : encode_steps(layout)) {
        for (const auto &g : step) {
            c.push(g);
        }
    }
    return detail::make_plan(std::move(c), CodecDirection::Encode);
}

/// Reverse of encode_full: moves the logical state back onto the data
/// qubits and returns every parity qubit to |0> on code states.
inline CodecPlan decode_full(const Layout &layout) {
    auto enc = encode_full(layout);
    auto c = invert(enc.circuit);
    c.name = "decode";
    return detail::make_plan(std::move(c), CodecDirection::Decode);
}

/// Adds parity qubit (i, i+1) from its two adjacent data qubits. The
/// constraint is satisfied afterwards only if the target started in |0>.
inline CodecPlan encode_one_direct(const Layout &layout, int i, int j) {
    if (i > j) {
        std::swap(i, j);
    }
    if (j != i + 1) {
        throw std::invalid_argument("parity qubit p" + std::to_string(i) + "_" + std::to_string(j) +
                                    " is not adjacent to both data qubits");
    }
    auto target = QubitId::parity(i, j);
    layout.require(target);
    Circuit c(layout.n(), "encode_one_direct");
    c.push(PhysicalGate::cnot(QubitId::data(i), target));
    c.push(PhysicalGate::cnot(QubitId::data(j), target));
    return detail::make_plan(std::move(c), CodecDirection::Encode);
}

/// Adds `target` from the other members of constraint `c` (2 or 3 CNOTs).
/// Applying the same plan again removes the qubit from the code.
inline CodecPlan encode_one_from_constraint(const Layout &layout, const QubitId &target, const Constraint &c) {
    if (!c.contains(target)) {
        throw std::invalid_argument("qubit " + target.str() + " is not a member of constraint " +
                                    std::to_string(c.id));
    }
    Circuit circ(layout.n(), "encode_one_from_constraint");
    for (const auto &q : c.qubits) {
        if (q != target) {
            circ.push(PhysicalGate::cnot(q, target));
        }
    }
    return detail::make_plan(std::move(circ), CodecDirection::Encode);
}

enum class SyndromeStyle { Ancilla, DecodeMeasureReencode };

/// Member of a constraint that decode-measure-reencode collapses: the one
/// farthest from the data row.
inline QubitId syndrome_target(const Layout &layout, const Constraint &c) {
    QubitId best = c.qubits.front();
    for (const auto &q : c.qubits) {
        auto a = layout.coordinate(q);
        auto b = layout.coordinate(best);
        if (a.y > b.y || (a.y == b.y && q > best)) {
            best = q;
        }
    }
    return best;
}

/// One readout of a constraint's eigenvalue.
inline Circuit syndrome_circuit(const Layout &layout, const Constraint &c, SyndromeStyle style) {
    Circuit out(layout.n(), "syndrome_" + std::to_string(c.id));
    if (style == SyndromeStyle::Ancilla) {
        auto anc = QubitId::ancilla(c.id);
        out.push(PhysicalGate::init0(anc));
        for (const auto &q : c.qubits) {
            out.push(PhysicalGate::cnot(q, anc));
        }
        out.push(PhysicalGate::measure_z(anc));
        return out;
    }
    auto target = syndrome_target(layout, c);
    auto plan = encode_one_from_constraint(layout, target, c);
    out.append(invert(plan.circuit));
    out.push(PhysicalGate::measure_z(target));
    out.append(plan.circuit);
    return out;
}

/// Builds the chip one parity qubit at a time, row by row from the data row
/// upward: row 1 from the data qubits, row 2 from its triangle, higher rows
/// from the diamond below each qubit.
inline Circuit encode_incremental(const Layout &layout) {
    const int n = layout.n();
    Circuit out(n, "encode_incremental");
    auto find = [&](const std::vector<QubitId> &members) -> const Constraint & {
        for (const auto &c : layout.constraints()) {
            if (c.qubits.size() != members.size()) {
                continue;
            }
            bool all = true;
            for (const auto &m : members) {
                all = all && c.contains(m);
            }
            if (all) {
                return c;
            }
        }
        throw std::logic_error("constraint not found");
    };
    for (int dist = 1; dist < n; dist++) {
        for (int i = 0; i + dist < n; i++) {
            int j = i + dist;
            auto target = QubitId::parity(i, j);
            if (dist == 1) {
                out.append(encode_one_direct(layout, i, j).circuit);
            } else if (dist == 2) {
                const auto &c = find({QubitId::parity(i, i + 1), QubitId::parity(i + 1, j), target});
                out.append(encode_one_from_constraint(layout, target, c).circuit);
            } else {
                const auto &c = find({QubitId::parity(i + 1, j - 1), QubitId::parity(i, j - 1),
                                      QubitId::parity(i + 1, j), target});
                out.append(encode_one_from_constraint(layout, target, c).circuit);
            }
        }
    }
    return out;
}

}  // namespace parity
