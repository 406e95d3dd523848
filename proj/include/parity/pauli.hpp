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

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/layout.hpp"

namespace parity {

// Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char pauli_char(Pauli p) { return "IXZY"[static_cast<int>(p)]; }

/// Tensor product of single-qubit Paulis keyed by qubit label (no phase).
class PauliString {
   public:
    PauliString() = default;

    void set(const QubitId &q, Pauli p) {
        if (p == Pauli::I) {
            ops_.erase(q);
        } else {
            ops_[q] = p;
        }
    }

    Pauli at(const QubitId &q) const {
        auto it = ops_.find(q);
        return it == ops_.end() ? Pauli::I : it->second;
    }

    size_t weight() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }
    const std::map<QubitId, Pauli> &ops() const { return ops_; }

    bool is_z_type() const {
        for (const auto &[q, p] : ops_) {
            if (p != Pauli::Z) {
                return false;
            }
        }
        return true;
    }

    std::string str() const {
        std::string out;
        for (const auto &[q, p] : ops_) {
            if (!out.empty()) {
                out += ' ';
            }
            out += pauli_char(p);
            out += q.str();
        }
        return out;
    }

    bool operator==(const PauliString &) const = default;

   private:
    std::map<QubitId, Pauli> ops_;
};

/// Z-type stabilizer of a parity constraint.
inline PauliString constraint_parity_operator(const Constraint &c) {
    if (c.qubits.size() != 3 && c.qubits.size() != 4) {
        throw std::invalid_argument("a parity constraint has 3 or 4 qubits, got " + std::to_string(c.qubits.size()));
    }
    PauliString out;
    for (const auto &q : c.qubits) {
        out.set(q, Pauli::Z);
    }
    return out;
}

/// Logical X of qubit i: X on every qubit of logical line i.
inline PauliString logical_x_operator(const Layout &layout, int i) {
    PauliString out;
    for (const auto &q : layout.logical_line(i).path) {
        out.set(q, Pauli::X);
    }
    return out;
}

/// Logical Z of qubit i: Z on its data qubit.
inline PauliString logical_z_operator(const Layout &layout, int i) {
    layout.require(QubitId::data(i));
    PauliString out;
    out.set(QubitId::data(i), Pauli::Z);
    return out;
}

/// Pauli string in symplectic (x|z) bit form over the chip's register
/// indices. Commutation reduces to the parity of two popcounts, so checks
/// stay cheap at any n.
class SymplecticPauli {
   public:
    explicit SymplecticPauli(size_t num_qubits)
        : num_qubits_(num_qubits), xs_((num_qubits + 63) / 64, 0), zs_((num_qubits + 63) / 64, 0) {}

    static SymplecticPauli from(const PauliString &p, const Layout &layout) {
        SymplecticPauli out(static_cast<size_t>(layout.num_qubits()));
        for (const auto &[q, op] : p.ops()) {
            size_t k = static_cast<size_t>(layout.index_of(q));
            auto bits = static_cast<std::uint8_t>(op);
            if (bits & 1) {
                out.xs_[k / 64] |= std::uint64_t{1} << (k % 64);
            }
            if (bits & 2) {
                out.zs_[k / 64] |= std::uint64_t{1} << (k % 64);
            }
        }
        return out;
    }

    size_t num_qubits() const { return num_qubits_; }

    bool commutes_with(const SymplecticPauli &other) const {
        if (other.num_qubits_ != num_qubits_) {
            throw std::invalid_argument("Pauli strings over different registers");
        }
        int parity = 0;
        for (size_t w = 0; w < xs_.size(); w++) {
            parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
        }
        return parity == 0;
    }

   private:
    size_t num_qubits_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

/// Commutation of label-keyed strings: anticommute iff an odd number of
/// shared sites carry different non-identity Paulis.
inline bool commutes(const PauliString &a, const PauliString &b) {
    int anti = 0;
    for (const auto &[q, p] : a.ops()) {
        Pauli r = b.at(q);
        if (r != Pauli::I && r != p) {
            anti ^= 1;
        }
    }
    return anti == 0;
}

}  // namespace parity
