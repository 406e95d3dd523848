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

#include <vector>

#include "parity/circuit.hpp"

namespace parity {

namespace detail {

inline bool disjoint(const PhysicalGate &a, const PhysicalGate &b) {
    if (b.touches(a.q0)) {
        return false;
    }
    return a.arity() == 1 || !b.touches(a.q1);
}

/// Sound commutation: disjoint supports; two CNOTs where neither control is
/// the other's target; an RZ on a CNOT control; an RX on a CNOT target.
inline bool commute(const PhysicalGate &a, const PhysicalGate &b) {
    if (disjoint(a, b)) {
        return true;
    }
    if (a.kind == GateKind::CNOT && b.kind == GateKind::CNOT) {
        return a.q0 != b.q1 && b.q0 != a.q1;
    }
    auto diagonal_on = [](const PhysicalGate &r, const PhysicalGate &cx) {
        if (cx.kind != GateKind::CNOT) {
            return false;
        }
        return (r.kind == GateKind::RZ && cx.q0 == r.q0) || (r.kind == GateKind::RX && cx.q1 == r.q0);
    };
    return diagonal_on(a, b) || diagonal_on(b, a);
}

}  // namespace detail

/// Rule-based cancellation pass.
///
/// Each gate looks backwards through gates it commutes with. A CNOT that
/// meets an identical CNOT annihilates with it; an RX/RZ that meets a
/// rotation of the same kind on the same qubit fuses into it (a fused angle
/// of exactly zero drops the gate). Every rewrite removes at least one gate,
/// so the pass terminates; it repeats until a fixed point.
inline Circuit peephole(const Circuit &input) {
    Circuit cur = input;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<PhysicalGate> out;
        std::vector<bool> alive;
        out.reserve(cur.gates.size());
        for (const auto &g : cur.gates) {
            bool absorbed = false;
            if (has_angle(g.kind) && g.angle == 0.0) {
                changed = true;
                continue;
            }
            if (g.kind == GateKind::CNOT || has_angle(g.kind)) {
                for (size_t k = out.size(); k-- > 0;) {
                    if (!alive[k]) {
                        continue;
                    }
                    auto &h = out[k];
                    if (g.kind == GateKind::CNOT && h == g) {
                        alive[k] = false;
                        absorbed = true;
                        break;
                    }
                    if (has_angle(g.kind) && h.kind == g.kind && h.q0 == g.q0) {
                        h.angle += g.angle;
                        if (h.angle == 0.0) {
                            alive[k] = false;
                        }
                        absorbed = true;
                        break;
                    }
                    if (!detail::commute(g, h)) {
                        break;
                    }
                }
            }
            if (absorbed) {
                changed = true;
                continue;
            }
            out.push_back(g);
            alive.push_back(true);
        }
        cur.gates.clear();
        for (size_t k = 0; k < out.size(); k++) {
            if (alive[k]) {
                cur.gates.push_back(out[k]);
            }
        }
    }
    return cur;
}

}  // namespace parity
