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

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parity {

enum class QubitKind : std::uint8_t { Data = 0, Parity = 1, Ancilla = 2 };

/// Label of a physical qubit on the chip.
///
/// Data(i) carries logical qubit i directly, Parity(i, j) with i < j carries
/// the parity of logical qubits i and j, and Ancilla(k) is a syndrome
/// ancilla sitting in the center of constraint k. The default ordering is the
/// canonical register order: data by index, then parity lexicographically,
/// then ancillas.
struct QubitId {
    QubitKind kind = QubitKind::Data;
    int i = 0;
    int j = -1;

    static constexpr QubitId data(int index) { return {QubitKind::Data, index, -1}; }
    static QubitId parity(int a, int b) {
        if (a == b) {
            throw std::invalid_argument("parity qubit needs two distinct logical indices");
        }
        if (a > b) {
            std::swap(a, b);
        }
        return {QubitKind::Parity, a, b};
    }
    static constexpr QubitId ancilla(int constraint_id) { return {QubitKind::Ancilla, constraint_id, -1}; }

    constexpr bool is_data() const { return kind == QubitKind::Data; }
    constexpr bool is_parity() const { return kind == QubitKind::Parity; }
    constexpr bool is_ancilla() const { return kind == QubitKind::Ancilla; }

    /// True when the label mentions logical index k (the qubit lies on line k).
    constexpr bool contains(int k) const {
        return (kind == QubitKind::Data && i == k) || (kind == QubitKind::Parity && (i == k || j == k));
    }

    auto operator<=>(const QubitId &) const = default;
    bool operator==(const QubitId &) const = default;

    std::string str() const {
        switch (kind) {
            case QubitKind::Data:
                return "d" + std::to_string(i);
            case QubitKind::Parity:
                return "p" + std::to_string(i) + "_" + std::to_string(j);
            case QubitKind::Ancilla:
                return "a" + std::to_string(i);
        }
        return "?";
    }
};

namespace detail {

inline int parse_index(std::string_view text, std::string_view whole) {
    if (text.empty() || text.size() > 6) {
        throw std::invalid_argument("bad qubit token '" + std::string(whole) + "'");
    }
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad qubit token '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace detail

/// Parses `d<i>`, `p<i>_<j>` (i < j) or `a<k>`.
inline QubitId parse_qubit(std::string_view token) {
    if (token.size() < 2) {
        throw std::invalid_argument("bad qubit token '" + std::string(token) + "'");
    }
    auto rest = token.substr(1);
    switch (token[0]) {
        case 'd':
            return QubitId::data(detail::parse_index(rest, token));
        case 'a':
            return QubitId::ancilla(detail::parse_index(rest, token));
        case 'p': {
            auto us = rest.find('_');
            if (us == std::string_view::npos) {
                throw std::invalid_argument("bad qubit token '" + std::string(token) + "'");
            }
            int a = detail::parse_index(rest.substr(0, us), token);
            int b = detail::parse_index(rest.substr(us + 1), token);
            if (a >= b) {
                throw std::invalid_argument("parity token needs i < j: '" + std::string(token) + "'");
            }
            return QubitId::parity(a, b);
        }
        default:
            throw std::invalid_argument("bad qubit token '" + std::string(token) + "'");
    }
}

struct Coordinate {
    int x = 0;
    int y = 0;
    auto operator<=>(const Coordinate &) const = default;
};

}  // namespace parity

template <>
struct std::hash<parity::QubitId> {
    size_t operator()(const parity::QubitId &q) const noexcept {
        return (static_cast<size_t>(q.kind) << 40) ^ (static_cast<size_t>(q.i) << 20) ^ static_cast<size_t>(q.j + 1);
    }
};
