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


#include <gtest/gtest.h>

#include "parity/fault_propagation.hpp"

namespace parity {
namespace {

TEST(FaultPropagation, CenterInjectionHitsCenter) {
    Layout l(5);
    auto rep = chain_error_locality_check(l, l.logical_line(2));
    for (const auto &r : rep.results) {
        EXPECT_EQ(r.center_hit, r.injection.qubit == rep.site) << r.injection.position << " " << r.injection.qubit.str();
    }
}

TEST(FaultPropagation, OuterInjectionStaysWeightOne) {
    for (int n = 2; n <= 6; n++) {
        Layout l(n);
        for (const auto &line : l.lines()) {
            auto rep = chain_error_locality_check(l, line);
            for (const auto &r : rep.results) {
                if (r.injection.position == 0) {
                    EXPECT_EQ(r.flips.size(), 1u);
                }
                EXPECT_TRUE(r.contiguous);
            }
        }
    }
}

TEST(FaultPropagation, MidArmInjectionSpreadsOutward) {
    Layout l(4);
    const auto &line = l.logical_line(1);
    auto rep = chain_error_locality_check(l, line);
    const auto &path = line.path;
    size_t fold_len = (rep.circuit.gates.size() - 1) / 2;
    bool saw_chain = false;
    for (const auto &r : rep.results) {
        if (r.injection.position > 0 && r.injection.position <= fold_len && r.injection.qubit != rep.site) {
            EXPECT_FALSE(r.center_hit);
            EXPECT_TRUE(r.contiguous);
            saw_chain |= r.flips.size() > 1;
            // every flipped qubit is at least as far from the site as the injection
            auto pos = [&](const QubitId &q) { return std::find(path.begin(), path.end(), q) - path.begin(); };
            auto site = pos(rep.site);
            for (const auto &f : r.flips) {
                EXPECT_GE(std::abs(pos(f) - site), std::abs(pos(r.injection.qubit) - site));
            }
        }
    }
    EXPECT_TRUE(saw_chain);
}

TEST(FaultPropagation, MatchesSimulatorInjection) {
    for (int n = 2; n <= 4; n++) {
        Layout l(n);
        for (const auto &line : l.lines()) {
            auto rep = chain_error_locality_check(l, line);
            for (const auto &r : rep.results) {
                EXPECT_LT(fault_pattern_deviation(rep.circuit, r.injection, r.flips), 1e-12);
            }
        }
    }
}

TEST(FaultPropagation, PropagationRules) {
    Circuit c(3);
    auto a = QubitId::data(0), b = QubitId::parity(0, 1);
    c.push(PhysicalGate::cnot(a, b));
    auto [frame, hit] = propagate_x(c, {0, a}, b);
    EXPECT_EQ(frame, (std::set<QubitId>{a, b}));
    EXPECT_TRUE(hit);
    auto [frame2, hit2] = propagate_x(c, {0, b}, a);
    EXPECT_EQ(frame2, (std::set<QubitId>{b}));
    EXPECT_FALSE(hit2);
    c.push(PhysicalGate::rz(a, 0.1));
    EXPECT_THROW(propagate_x(c, {0, a}, a), std::invalid_argument);
}

}  // namespace
}  // namespace parity
