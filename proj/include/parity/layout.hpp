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
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/qubit.hpp"

namespace parity {

/// A 3- or 4-body Z-type parity constraint (plaquette) of the layout.
struct Constraint {
    int id = 0;
    std::vector<QubitId> qubits;  // canonical order
    Coordinate center;            // plaquette center; ancilla site

    bool contains(const QubitId &q) const {
        return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
    }
    bool operator==(const Constraint &) const = default;
};

/// All qubits whose label contains one logical index, ordered as a lattice
/// path: (0,i), (1,i), ..., (i-1,i), Data(i), (i,i+1), ..., (i,n-1).
struct LogicalLine {
    int logical_index = 0;
    std::vector<QubitId> path;

    /// Position of the data qubit on the path (always equal to logical_index).
    int data_position() const { return logical_index; }
    bool operator==(const LogicalLine &) const = default;
};

/// Lattice position of a data or parity qubit.
///
/// Data qubits form the bottom row at (2i, 0); parity qubit (i, j) sits at
/// (i + j, j - i). Nearest neighbors differ by (+-1, +-1).
inline Coordinate coordinate_of(const QubitId &q) {
    switch (q.kind) {
        case QubitKind::Data:
            return {2 * q.i, 0};
        case QubitKind::Parity:
            return {q.i + q.j, q.j - q.i};
        case QubitKind::Ancilla:
            break;
    }
    throw std::invalid_argument("ancilla coordinates depend on the layout: " + q.str());
}

/// The extended LHZ chip for n logical qubits. Immutable after construction.
class Layout {
   public:
    explicit Layout(int n) : n_(n) {
        if (n < 2) {
            throw std::invalid_argument("layout needs n >= 2 logical qubits, got " + std::to_string(n));
        }
        for (int i = 0; i < n; i++) {
            qubits_.push_back(QubitId::data(i));
        }
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                qubits_.push_back(QubitId::parity(i, j));
            }
        }
        auto add = [&](std::vector<QubitId> members, Coordinate center) {
            std::sort(members.begin(), members.end());
            constraints_.push_back({static_cast<int>(constraints_.size()), std::move(members), center});
        };
        for (int i = 0; i + 1 < n; i++) {
            add({QubitId::data(i), QubitId::data(i + 1), QubitId::parity(i, i + 1)}, {2 * i + 1, 0});
        }
        for (int i = 0; i + 2 < n; i++) {
            add({QubitId::parity(i, i + 1), QubitId::parity(i + 1, i + 2), QubitId::parity(i, i + 2)},
                {2 * i + 2, 1});
        }
        for (int i = 1; i < n - 2; i++) {
            for (int j = i + 1; j <= n - 2; j++) {
                add({QubitId::parity(i, j), QubitId::parity(i - 1, j), QubitId::parity(i, j + 1),
                     QubitId::parity(i - 1, j + 1)},
                    {i + j, j - i + 1});
            }
        }
        for (int i = 0; i < n; i++) {
            LogicalLine line{i, {}};
            for (int k = 0; k < i; k++) {
                line.path.push_back(QubitId::parity(k, i));
            }
            line.path.push_back(QubitId::data(i));
            for (int k = i + 1; k < n; k++) {
                line.path.push_back(QubitId::parity(i, k));
            }
            lines_.push_back(std::move(line));
        }
    }

    int n() const { return n_; }
    /// K = n(n+1)/2 physical qubits.
    int num_qubits() const { return n_ * (n_ + 1) / 2; }
    const std::vector<QubitId> &qubits() const { return qubits_; }
    const std::vector<Constraint> &constraints() const { return constraints_; }
    const std::vector<LogicalLine> &lines() const { return lines_; }

    bool contains(const QubitId &q) const {
        switch (q.kind) {
            case QubitKind::Data:
                return q.i >= 0 && q.i < n_;
            case QubitKind::Parity:
                return q.i >= 0 && q.i < q.j && q.j < n_;
            case QubitKind::Ancilla:
                return q.i >= 0 && q.i < static_cast<int>(constraints_.size());
        }
        return false;
    }

    /// Canonical register index of a data or parity qubit.
    int index_of(const QubitId &q) const {
        require(q);
        if (q.is_data()) {
            return q.i;
        }
        if (q.is_parity()) {
            return n_ + q.i * (2 * n_ - q.i - 1) / 2 + (q.j - q.i - 1);
        }
        throw std::invalid_argument("ancilla " + q.str() + " has no fixed chip index");
    }

    Coordinate coordinate(const QubitId &q) const {
        require(q);
        if (q.is_ancilla()) {
            return constraints_[q.i].center;
        }
        return coordinate_of(q);
    }

    const LogicalLine &logical_line(int i) const {
        if (i < 0 || i >= n_) {
            throw std::out_of_range("logical index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(n_));
        }
        return lines_[i];
    }

    const Constraint &constraint(int id) const {
        if (id < 0 || id >= static_cast<int>(constraints_.size())) {
            throw std::out_of_range("constraint id " + std::to_string(id) + " out of range");
        }
        return constraints_[id];
    }

    /// Lattice adjacency. Chip qubits are neighbors when they differ by a
    /// diagonal step; an ancilla neighbors the corners of its plaquette.
    bool are_neighbors(const QubitId &a, const QubitId &b) const {
        auto pa = coordinate(a);
        auto pb = coordinate(b);
        int dx = std::abs(pa.x - pb.x);
        int dy = std::abs(pa.y - pb.y);
        if (a.is_ancilla() || b.is_ancilla()) {
            if (a.is_ancilla() && b.is_ancilla()) {
                return false;
            }
            return dx + dy == 1;
        }
        return dx == 1 && dy == 1;
    }

    void require(const QubitId &q) const {
        if (!contains(q)) {
            throw std::out_of_range("qubit " + q.str() + " is not part of the n=" + std::to_string(n_) + " layout");
        }
    }

    bool operator==(const Layout &) const = default;

   private:
    int n_;
    std::vector<QubitId> qubits_;
    std::vector<Constraint> constraints_;
    std::vector<LogicalLine> lines_;
};

inline Layout build_layout(int n) { return Layout(n); }

inline const LogicalLine &logical_line(const Layout &layout, int i) { return layout.logical_line(i); }

inline bool are_neighbors(const Layout &layout, const QubitId &a, const QubitId &b) {
    return layout.are_neighbors(a, b);
}

}  // namespace parity
