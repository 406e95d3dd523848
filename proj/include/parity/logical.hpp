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

#include <array>
#include <cmath>
#include <numbers>
#include <complex>
#include <stdexcept>

#include "parity/circuit.hpp"
#include "parity/statevector.hpp"

namespace parity {

/// 2x2 matrix, row-major.
using Mat2 = std::array<Complex, 4>;

inline Mat2 mat_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 rz_matrix(double t) { return {std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2)}; }

inline Mat2 rx_matrix(double t) {
    double c = std::cos(t / 2);
    double s = std::sin(t / 2);
    return {c, Complex(0, -s), Complex(0, -s), c};
}

inline Mat2 hadamard_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}

/// Rz(alpha) Rx(beta) Rz(gamma).
inline Mat2 u_matrix(double alpha, double beta, double gamma) {
    return mat_mul(rz_matrix(alpha), mat_mul(rx_matrix(beta), rz_matrix(gamma)));
}

/// Applies the textbook action of a logical gate to an n-qubit state whose
/// qubit i is logical qubit i. Used as the reference for equivalence checks.
inline void apply_logical_reference(Statevector &sv, const LogicalGate &g) {
    auto apply2 = [&](int q, const Mat2 &m) { sv.apply_1q(q, m[0], m[1], m[2], m[3]); };
    auto controlled_phase = [&](int a, int b, double phi) {
        size_t mask = (size_t{1} << a) | (size_t{1} << b);
        Complex ph = std::polar(1.0, phi);
        auto &amps = sv.amplitudes();
        for (size_t k = 0; k < amps.size(); k++) {
            if ((k & mask) == mask) {
                amps[k] *= ph;
            }
        }
    };
    int i = g.targets[0];
    switch (g.kind) {
        case LogicalKind::RX:
            sv.rx(i, g.angles[0]);
            return;
        case LogicalKind::RZ:
            sv.rz(i, g.angles[0]);
            return;
        case LogicalKind::X:
            sv.x(i);
            return;
        case LogicalKind::H:
            sv.h(i);
            return;
        case LogicalKind::U:
            apply2(i, u_matrix(g.angles[0], g.angles[1], g.angles[2]));
            return;
        case LogicalKind::CP:
            controlled_phase(i, g.targets[1], g.angles[0]);
            return;
        case LogicalKind::CZ:
            controlled_phase(i, g.targets[1], std::numbers::pi);
            return;
        case LogicalKind::CNOT:
            sv.cnot(i, g.targets[1]);
            return;
    }
    throw std::logic_error("unhandled logical gate");
}

inline void apply_logical_reference(Statevector &sv, const LogicalCircuit &c) {
    for (const auto &g : c.gates) {
        apply_logical_reference(sv, g);
    }
}

}  // namespace parity
