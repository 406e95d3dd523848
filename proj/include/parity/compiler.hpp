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
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/codec.hpp"
#include "parity/layout.hpp"
#include "parity/peephole.hpp"

namespace parity {

enum class RotationSite {
    Center,  // balanced fold toward the middle of the logical line
    Data,    // fold onto the logical qubit's data qubit
};

struct LoweringOptions {
    RotationSite site = RotationSite::Center;
    bool peephole = false;
};

struct CompiledGate {
    std::vector<LogicalGate> logical;
    Circuit physical;
    ResourceCount resources;
};

// ---------------------------------------------------------------------------
// CNOT chains along logical lines.

/// Path position of the balanced rotation site: arms of n/2 and (n-1)/2.
inline int center_position(int n) { return n / 2; }

/// Fold chain that concentrates the X parity of logical line i onto path
/// position `site`, in time order.
///
/// Each arm runs from its outer end inward. Every CNOT points outward
/// (control nearer the site), so conjugating X on the site through the chain
/// yields X on the whole line while Z on the site is left unchanged.
inline std::vector<PhysicalGate> line_fold(const Layout &layout, int i, int site) {
    const auto &path = layout.logical_line(i).path;
    const int len = static_cast<int>(path.size());
    if (site < 0 || site >= len) {
        throw std::out_of_range("rotation site outside logical line");
    }
    const int left = site;
    const int right = len - 1 - site;
    std::vector<PhysicalGate> out;
    for (int step = 1; step <= std::max(left, right); step++) {
        if (step <= left) {
            out.push_back(PhysicalGate::cnot(path[step], path[step - 1]));
        }
        if (step <= right) {
            out.push_back(PhysicalGate::cnot(path[len - 1 - step], path[len - step]));
        }
    }
    return out;
}

namespace detail {

inline void push_all(Circuit &c, const std::vector<PhysicalGate> &gates) {
    c.gates.insert(c.gates.end(), gates.begin(), gates.end());
}

inline void push_reversed(Circuit &c, const std::vector<PhysicalGate> &gates) {
    c.gates.insert(c.gates.end(), gates.rbegin(), gates.rend());
}

inline CompiledGate finish(std::vector<LogicalGate> logical, Circuit c, bool run_peephole) {
    if (run_peephole) {
        c = peephole(c);
    }
    auto res = count_resources(c, true);
    return {std::move(logical), std::move(c), res};
}

inline void require_logical(const Layout &layout, int i) {
    if (i < 0 || i >= layout.n()) {
        throw std::out_of_range("logical index " + std::to_string(i) + " out of range for n=" +
                                std::to_string(layout.n()));
    }
}

/// fold, the given rotations on the site, unfold.
inline Circuit chain_around(const Layout &layout, int i, int site, const std::vector<PhysicalGate> &body) {
    Circuit c(layout.n());
    auto fold = line_fold(layout, i, site);
    push_all(c, fold);
    push_all(c, body);
    push_reversed(c, fold);
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-gate lowerings.

/// Logical Rz is the physical Rz on the data qubit.
inline CompiledGate compile_rz(const Layout &layout, int i, double theta, const LoweringOptions &opts = {}) {
    detail::require_logical(layout, i);
    Circuit c(layout.n(), "rz");
    c.push(PhysicalGate::rz(QubitId::data(i), theta));
    return detail::finish({LogicalGate::rz(i, theta)}, std::move(c), opts.peephole);
}

/// exp(-i a/2 X~_i): fold the line onto the rotation site, Rx there, unfold.
inline CompiledGate compile_rx(const Layout &layout, int i, double alpha, const LoweringOptions &opts = {}) {
    detail::require_logical(layout, i);
    const auto &path = layout.logical_line(i).path;
    int site = opts.site == RotationSite::Data ? i : center_position(layout.n());
    auto c = detail::chain_around(layout, i, site, {PhysicalGate::rx(path[site], alpha)});
    c.name = "rx";
    return detail::finish({LogicalGate::rx(i, alpha)}, std::move(c), opts.peephole);
}

/// Logical X flips every qubit of the line, in parallel.
inline CompiledGate compile_x(const Layout &layout, int i, const LoweringOptions &opts = {}) {
    detail::require_logical(layout, i);
    Circuit c(layout.n(), "x");
    for (const auto &q : layout.logical_line(i).path) {
        c.push(PhysicalGate::x(q));
    }
    return detail::finish({LogicalGate::x(i)}, std::move(c), opts.peephole);
}

/// Controlled phase from three parallel Rz: phi/2 on both data qubits and
/// -phi/2 on their parity qubit. Equal to CP_phi up to the phase e^{-i phi/4}.
inline CompiledGate compile_cp(const Layout &layout, int i, int j, double phi, const LoweringOptions &opts = {}) {
    detail::require_logical(layout, i);
    detail::require_logical(layout, j);
    if (i == j) {
        throw std::invalid_argument("CP needs two distinct logical qubits");
    }
    Circuit c(layout.n(), "cp");
    c.push(PhysicalGate::rz(QubitId::data(i), phi / 2));
    c.push(PhysicalGate::rz(QubitId::parity(i, j), -phi / 2));
    c.push(PhysicalGate::rz(QubitId::data(j), phi / 2));
    return detail::finish({LogicalGate::cp(i, j, phi)}, std::move(c), opts.peephole);
}

namespace detail {

/// U = Rz(alpha) Rx(beta) Rz(gamma) with the Rx folded onto path position
/// `site`. The Rz rotations always act on the data qubit.
inline Circuit u_with_site(const Layout &layout, int i, double alpha, double beta, double gamma, int site) {
    const auto &path = layout.logical_line(i).path;
    auto d = QubitId::data(i);
    if (path[site] == d) {
        return chain_around(layout, i, site,
                            {PhysicalGate::rz(d, gamma), PhysicalGate::rx(d, beta), PhysicalGate::rz(d, alpha)});
    }
    Circuit c(layout.n());
    c.push(PhysicalGate::rz(d, gamma));
    c.append(chain_around(layout, i, site, {PhysicalGate::rx(path[site], beta)}));
    c.push(PhysicalGate::rz(d, alpha));
    return c;
}

}  // namespace detail

/// Arbitrary single-qubit unitary Rz(alpha) Rx(beta) Rz(gamma).
///
/// With RotationSite::Data all three rotations sit on the data qubit between
/// the fold and unfold. With RotationSite::Center the Rz rotations stay on
/// the data qubit and the Rx goes to the line position that minimizes the
/// merged depth, so the Rz can run in parallel with the outer chain.
inline CompiledGate compile_u(const Layout &layout, int i, double alpha, double beta, double gamma,
                              const LoweringOptions &opts = {}) {
    detail::require_logical(layout, i);
    const int n = layout.n();
    Circuit best;
    if (opts.site == RotationSite::Data) {
        best = detail::u_with_site(layout, i, alpha, beta, gamma, i);
    } else {
        int best_depth = std::numeric_limits<int>::max();
        int best_offset = std::numeric_limits<int>::max();
        for (int site = 0; site < n; site++) {
            auto c = detail::u_with_site(layout, i, alpha, beta, gamma, site);
            int depth = merged_depth(c);
            int offset = std::abs(site - center_position(n));
            if (depth < best_depth || (depth == best_depth && offset < best_offset)) {
                best = std::move(c);
                best_depth = depth;
                best_offset = offset;
            }
        }
    }
    best.name = "u";
    return detail::finish({LogicalGate::u(i, alpha, beta, gamma)}, std::move(best), opts.peephole);
}

/// Hadamard as Rz(pi/2) Rx(pi/2) Rz(pi/2), equal to H up to global phase.
inline CompiledGate compile_h(const Layout &layout, int i, const LoweringOptions &opts = {}) {
    auto out = compile_u(layout, i, std::numbers::pi / 2, std::numbers::pi / 2, std::numbers::pi / 2, opts);
    out.logical = {LogicalGate::h(i)};
    out.physical.name = "h";
    return out;
}

/// Logical CNOT as H~(t) CP~(c, t, pi) H~(t), Hadamards folded onto Data(t).
///
/// Without the peephole pass the two Hadamard chains contribute 4(n-1)
/// CNOTs. With it, the inner unfold/fold pair cancels except for the arm
/// segment between Data(t) and the parity qubit (c, t), and the three Rz on
/// Data(t) fuse into one.
inline CompiledGate compile_cnot(const Layout &layout, int control, int target, const LoweringOptions &opts = {}) {
    detail::require_logical(layout, control);
    detail::require_logical(layout, target);
    if (control == target) {
        throw std::invalid_argument("CNOT needs distinct control and target");
    }
    LoweringOptions inner{RotationSite::Data, false};
    Circuit c(layout.n(), "cnot");
    c.append(compile_h(layout, target, inner).physical);
    c.append(compile_cp(layout, control, target, std::numbers::pi, inner).physical);
    c.append(compile_h(layout, target, inner).physical);
    return detail::finish({LogicalGate::cnot(control, target)}, std::move(c), opts.peephole);
}

struct SingleQubitUnitary {
    int qubit = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Product of m <= n single-qubit unitaries on distinct logical qubits:
/// decode, rotate the data qubits, encode again.
inline CompiledGate compile_parallel_unitaries(const Layout &layout, const std::vector<SingleQubitUnitary> &ops,
                                               const LoweringOptions &opts = {}) {
    std::set<int> seen;
    std::vector<LogicalGate> logical;
    for (const auto &op : ops) {
        detail::require_logical(layout, op.qubit);
        if (!seen.insert(op.qubit).second) {
            throw std::invalid_argument("duplicate logical qubit " + std::to_string(op.qubit) + " in parallel batch");
        }
        logical.push_back(LogicalGate::u(op.qubit, op.alpha, op.beta, op.gamma));
    }
    Circuit c(layout.n(), "parallel_unitaries");
    c.append(decode_full(layout).circuit);
    for (const auto &op : ops) {
        auto d = QubitId::data(op.qubit);
        c.push(PhysicalGate::rz(d, op.gamma));
        c.push(PhysicalGate::rx(d, op.beta));
        c.push(PhysicalGate::rz(d, op.alpha));
    }
    c.append(encode_full(layout).circuit);
    return detail::finish(std::move(logical), std::move(c), opts.peephole);
}

/// Dispatches one logical gate to its lowering.
inline CompiledGate compile_gate(const Layout &layout, const LogicalGate &g, const LoweringOptions &opts = {}) {
    int i = g.targets[0];
    switch (g.kind) {
        case LogicalKind::RZ:
            return compile_rz(layout, i, g.angles[0], opts);
        case LogicalKind::RX:
            return compile_rx(layout, i, g.angles[0], opts);
        case LogicalKind::X:
            return compile_x(layout, i, opts);
        case LogicalKind::CP:
            return compile_cp(layout, i, g.targets[1], g.angles[0], opts);
        case LogicalKind::CZ: {
            auto out = compile_cp(layout, i, g.targets[1], std::numbers::pi, opts);
            out.logical = {g};
            return out;
        }
        case LogicalKind::CNOT:
            return compile_cnot(layout, i, g.targets[1], opts);
        case LogicalKind::U:
            return compile_u(layout, i, g.angles[0], g.angles[1], g.angles[2], opts);
        case LogicalKind::H:
            return compile_h(layout, i, opts);
    }
    throw std::logic_error("unhandled logical gate");
}

/// Concatenates per-gate lowerings in order; the peephole option also runs a
/// pass over the whole result.
inline Circuit compile_circuit(const Layout &layout, const LogicalCircuit &logical, const LoweringOptions &opts = {}) {
    if (logical.n != layout.n()) {
        throw std::invalid_argument("logical circuit has n=" + std::to_string(logical.n) + " but layout has n=" +
                                    std::to_string(layout.n()));
    }
    logical.validate();
    Circuit out(layout.n(), logical.name);
    for (const auto &g : logical.gates) {
        out.append(compile_gate(layout, g, opts).physical);
    }
    if (opts.peephole) {
        out = peephole(out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reference resource counts.

struct Table1Row {
    int single_qubit = 0;
    int two_qubit = 0;
    int depth = 0;
    bool depth_is_bound = false;  // depth is an upper bound rather than exact

    std::string str() const {
        return std::to_string(single_qubit) + "/" + std::to_string(two_qubit) + "/" + (depth_is_bound ? "<=" : "") +
               std::to_string(depth);
    }
};

inline int ceil_half(int n) { return (n + 1) / 2; }

/// Published resource counts for one logical gate on an n-qubit chip.
/// For n <= 4 the U depth carries two extra steps.
inline Table1Row table1_row(const LogicalGate &g, int n) {
    switch (g.kind) {
        case LogicalKind::RX:
            return {1, 2 * (n - 1), 2 * ceil_half(n) + 1, true};
        case LogicalKind::X:
            return {n, 0, 1, false};
        case LogicalKind::RZ:
            return {1, 0, 1, false};
        case LogicalKind::U:
        case LogicalKind::H:
            return {3, 2 * (n - 1), 2 * ceil_half(n) + 1 + (n <= 4 ? 2 : 0), true};
        case LogicalKind::CP:
        case LogicalKind::CZ:
            return {3, 0, 1, false};
        case LogicalKind::CNOT:
            return {7, 2 * (n - 1 + std::abs(g.targets[0] - g.targets[1])), 4 * ceil_half(n) + 3, true};
    }
    throw std::logic_error("unhandled logical gate");
}

/// Batch row: m unitaries on an n-qubit chip.
inline Table1Row table1_batch_row(int m, int n) { return {3 * m, 2 * n * (n - 1), 2 * n + 3, false}; }

inline bool matches_table1(const ResourceCount &r, const Table1Row &row) {
    bool depth_ok = row.depth_is_bound ? r.depth <= row.depth : r.depth == row.depth;
    return r.single_qubit == row.single_qubit && r.two_qubit == row.two_qubit && depth_ok;
}

}  // namespace parity
