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
#include <cstdint>
#include <random>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/codec.hpp"
#include "parity/layout.hpp"
#include "parity/logical.hpp"
#include "parity/pauli.hpp"
#include "parity/statevector.hpp"

namespace parity {

inline constexpr double kFidelityTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-10;

struct EquivalenceReport {
    int n = 0;
    size_t trials = 0;
    std::uint64_t seed = 0;
    double min_fidelity = 1.0;
    double max_residual = 0.0;             // population left on parity/ancilla qubits after decoding
    double max_constraint_deviation = 0.0; // max |<C> - 1| right before decoding

    bool passed(double fidelity_tol = kFidelityTolerance, double residual_tol = kResidualTolerance) const {
        return min_fidelity >= 1.0 - fidelity_tol && max_residual <= residual_tol;
    }
};

/// Runs encode, the physical circuit, decode on random logical states and
/// compares the decoded data register against the reference logical circuit.
inline EquivalenceReport check_equivalence(const Layout &layout, const Circuit &physical,
                                           const LogicalCircuit &reference, size_t trials, std::uint64_t seed) {
    const int n = layout.n();
    if (reference.n != n) {
        throw std::invalid_argument("reference circuit width does not match the layout");
    }
    const auto reg = Register::for_circuit(layout, physical);
    const auto encode = encode_full(layout).circuit;
    const auto decode = decode_full(layout).circuit;
    std::vector<PauliString> constraints;
    for (const auto &c : layout.constraints()) {
        constraints.push_back(constraint_parity_operator(c));
    }

    EquivalenceReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    const size_t data_dim = size_t{1} << n;
    for (size_t t = 0; t < trials; t++) {
        auto chip = Statevector::random(reg.size(), n, rng, rng());
        std::vector<Complex> logical_amps(chip.amplitudes().begin(),
                                          chip.amplitudes().begin() + static_cast<std::ptrdiff_t>(data_dim));
        auto expected = Statevector::from_amplitudes(std::move(logical_amps));
        apply_logical_reference(expected, reference);

        chip.run(encode, reg);
        chip.run(physical, reg);
        for (const auto &c : constraints) {
            report.max_constraint_deviation =
                std::max(report.max_constraint_deviation, std::abs(chip.expectation(c, reg) - 1.0));
        }
        chip.run(decode, reg);

        double residual = non_data_population(chip, n);
        report.max_residual = std::max(report.max_residual, residual);
        Complex overlap = 0.0;
        for (size_t k = 0; k < data_dim; k++) {
            overlap += std::conj(expected.amplitudes()[k]) * chip.amplitudes()[k];
        }
        double fid = std::norm(overlap);
        report.min_fidelity = std::min(report.min_fidelity, std::min(1.0, fid));
    }
    return report;
}

}  // namespace parity
