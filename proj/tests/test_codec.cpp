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

#include <fstream>
#include <random>
#include <sstream>

#include "parity/circuit_io.hpp"
#include "parity/codec.hpp"
#include "parity/layout.hpp"
#include "parity/pauli.hpp"
#include "parity/statevector.hpp"

namespace parity {
namespace {

TEST(Encode, SmallestChip) {
    Layout l(2);
    auto c = encode_full(l).circuit;
    ASSERT_EQ(c.gates.size(), 2u);
    EXPECT_EQ(c.gates[0], PhysicalGate::cnot(QubitId::data(0), QubitId::parity(0, 1)));
    EXPECT_EQ(c.gates[1], PhysicalGate::cnot(QubitId::data(1), QubitId::parity(0, 1)));
    EXPECT_EQ(schedule(c).depth(), 2);
}

// Every CNOT couples lattice neighbors or two members of one constraint.
bool within_constraints(const Circuit &c, const Layout &l) {
    for (const auto &g : c.gates) {
        if (g.kind != GateKind::CNOT || l.are_neighbors(g.q0, g.q1)) {
            continue;
        }
        bool shared = false;
        for (const auto &con : l.constraints()) {
            shared = shared || (con.contains(g.q0) && con.contains(g.q1));
        }
        if (!shared) {
            return false;
        }
    }
    return true;
}

TEST(Encode, CountsDepthAndLocality) {
    for (int n = 2; n <= 12; n++) {
        Layout l(n);
        auto c = encode_full(l).circuit;
        EXPECT_EQ(static_cast<int>(c.gates.size()), n * (n - 1)) << n;
        EXPECT_EQ(static_cast<int>(c.count(GateKind::CNOT)), n * (n - 1));
        // n=2 has a single parity qubit fed by two CNOTs, so depth is 2.
        const int depth = n == 2 ? 2 : n + 1;
        EXPECT_EQ(schedule(c).depth(), depth) << n;
        EXPECT_TRUE(validate_locality(c, l).empty()) << n;
        std::map<QubitId, int> hits;
        for (const auto &g : c.gates) {
            hits[g.q1]++;
        }
        for (const auto &q : l.qubits()) {
            EXPECT_EQ(hits[q], q.is_parity() ? 2 : 0) << q.str();
        }
        auto dec = decode_full(l).circuit;
        EXPECT_EQ(schedule(dec).depth(), depth);
        EXPECT_EQ(decode_full(l).direction, CodecDirection::Decode);
    }
}

TEST(Encode, EachAlgorithmStepIsOneLayer) {
    for (int n = 3; n <= 12; n++) {
        Layout l(n);
        auto steps = encode_steps(l);
        EXPECT_EQ(static_cast<int>(steps.size()), n + 1) << n;
        for (const auto &step : steps) {
            Circuit c(n);
            c.gates = step;
            EXPECT_EQ(schedule(c).depth(), 1);
        }
    }
}

TEST(Encode, GoldenSixQubitListing) {
    Layout l(6);
    auto steps = encode_steps(l);
    std::vector<size_t> sizes;
    Circuit c(6);
    for (const auto &s : steps) {
        sizes.push_back(s.size());
        c.gates.insert(c.gates.end(), s.begin(), s.end());
    }
    std::ifstream in(std::string(PARITY_GOLDEN_DIR) + "/encode_n6.txt");
    ASSERT_TRUE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(to_text(c, sizes), golden.str());
    EXPECT_EQ(parse_physical_text(golden.str()).gates, encode_full(l).circuit.gates);
}

TEST(Encode, ClassicalParityLaw) {
    for (int n = 2; n <= 5; n++) {
        Layout l(n);
        auto reg = Register::for_layout(l);
        auto enc = encode_full(l).circuit;
        for (std::uint64_t x = 0; x < (1u << n); x++) {
            auto s = Statevector::basis(reg.size(), x);
            s.run(enc, reg);
            size_t out = 0;
            for (size_t k = 0; k < s.amplitudes().size(); k++) {
                if (std::abs(s.amplitudes()[k]) > 0.5) {
                    out = k;
                }
            }
            for (int i = 0; i < n; i++) {
                EXPECT_EQ((out >> i) & 1, (x >> i) & 1);
                for (int j = i + 1; j < n; j++) {
                    int bit = (out >> reg.index_of(QubitId::parity(i, j))) & 1;
                    EXPECT_EQ(bit, static_cast<int>(((x >> i) ^ (x >> j)) & 1)) << n << " " << x;
                }
            }
        }
    }
}

TEST(Codec, RoundTripOnAllBasisStates) {
    for (int n = 2; n <= 4; n++) {
        Layout l(n);
        auto reg = Register::for_layout(l);
        Circuit both = encode_full(l).circuit;
        both.append(decode_full(l).circuit);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << reg.size()); b++) {
            auto s = Statevector::basis(reg.size(), b);
            s.run(both, reg);
            ASSERT_NEAR(std::abs(s.amplitudes()[b]), 1.0, 1e-15) << n << " " << b;
        }
    }
}

TEST(Codec, DecodePlusState) {
    Layout l(4);
    auto reg = Register::for_layout(l);
    Statevector s(reg.size());
    for (int i = 0; i < 4; i++) {
        s.h(i);
    }
    auto before = reduced_data_state(s, l);
    s.run(encode_full(l).circuit, reg);
    s.run(decode_full(l).circuit, reg);
    EXPECT_LT(non_data_population(s, 4), 1e-12);
    EXPECT_NEAR(fidelity_up_to_phase(reduced_data_state(s, l), before), 1.0, 1e-12);
}

TEST(Codec, DirectEncoding) {
    Layout l(4);
    auto plan = encode_one_direct(l, 0, 1);
    ASSERT_EQ(plan.circuit.gates.size(), 2u);
    for (const auto &g : plan.circuit.gates) {
        EXPECT_EQ(g.q1, QubitId::parity(0, 1));
    }
    EXPECT_THROW(encode_one_direct(l, 0, 2), std::invalid_argument);

    auto reg = Register::for_layout(l);
    std::mt19937_64 rng(2);
    auto z = constraint_parity_operator(l.constraints()[0]);
    for (int t = 0; t < 20; t++) {
        auto s = Statevector::random(reg.size(), 4, rng);
        s.run(plan.circuit, reg);
        EXPECT_NEAR(s.expectation(z, reg), 1.0, 1e-12);
    }
}

TEST(Codec, ConstraintEncoding) {
    Layout l(5);
    const Constraint *diamond = nullptr, *tri = nullptr;
    for (const auto &c : l.constraints()) {
        if (c.qubits.size() == 4 && c.contains(QubitId::parity(0, 3))) diamond = &c;
        if (c.qubits.size() == 3 && !tri) tri = &c;
    }
    ASSERT_NE(diamond, nullptr);
    auto plan = encode_one_from_constraint(l, QubitId::parity(0, 3), *diamond);
    EXPECT_EQ(plan.circuit.gates.size(), 3u);
    int across = 0;
    for (const auto &g : plan.circuit.gates) {
        EXPECT_EQ(g.q1, QubitId::parity(0, 3));
        EXPECT_TRUE(diamond->contains(g.q0));
        across += !l.are_neighbors(g.q0, g.q1);
    }
    // the opposite corner of the plaquette is not a lattice neighbor
    EXPECT_EQ(across, 1);
    EXPECT_EQ(encode_one_from_constraint(l, tri->qubits.back(), *tri).circuit.gates.size(), 2u);
    EXPECT_THROW(encode_one_from_constraint(l, QubitId::data(4), *diamond), std::invalid_argument);

    // twice is identity on the target
    auto reg = Register::for_layout(l);
    std::mt19937_64 rng(6);
    auto s = Statevector::random(reg.size(), 5, rng);
    s.run(encode_full(l).circuit, reg);
    auto before = s;
    s.run(plan.circuit, reg);
    EXPECT_NEAR(s.probability_one(reg.index_of(QubitId::parity(0, 3))), 0.0, 1e-12);
    s.run(plan.circuit, reg);
    EXPECT_NEAR(fidelity_up_to_phase(s, before), 1.0, 1e-12);
}

TEST(Codec, IncrementalBuildMatchesFullEncoding) {
    std::mt19937_64 rng(12);
    for (int n = 2; n <= 4; n++) {
        Layout l(n);
        auto reg = Register::for_layout(l);
        auto inc = encode_incremental(l);
        EXPECT_TRUE(within_constraints(inc, l));
        for (int t = 0; t < 10; t++) {
            auto a = Statevector::random(reg.size(), n, rng);
            auto b = a;
            a.run(encode_full(l).circuit, reg);
            b.run(inc, reg);
            EXPECT_NEAR(fidelity_up_to_phase(a, b), 1.0, 1e-12);
        }
    }
}

TEST(Syndrome, AncillaStyle) {
    Layout l(4);
    for (const auto &c : l.constraints()) {
        auto circ = syndrome_circuit(l, c, SyndromeStyle::Ancilla);
        EXPECT_EQ(circ.count(GateKind::INIT0), 1u);
        EXPECT_EQ(circ.count(GateKind::CNOT), c.qubits.size());
        EXPECT_EQ(circ.count(GateKind::MEASURE_Z), 1u);
        EXPECT_TRUE(validate_locality(circ, l).empty());
    }
    const Constraint *diamond = nullptr;
    for (const auto &c : l.constraints()) {
        if (c.qubits.size() == 4) diamond = &c;
    }
    ASSERT_NE(diamond, nullptr);
    auto circ = syndrome_circuit(l, *diamond, SyndromeStyle::Ancilla);
    EXPECT_EQ(circ.gates.size(), 6u);

    auto reg = Register::for_circuit(l, circ);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; t++) {
        auto s = Statevector::random(reg.size(), 4, rng, t);
        s.run(encode_full(l).circuit, reg);
        auto faulty = s;
        s.run(circ, reg);
        EXPECT_EQ(s.measurements().back(), 0);
        faulty.x(reg.index_of(diamond->qubits[t % 4]));
        faulty.run(circ, reg);
        EXPECT_EQ(faulty.measurements().back(), 1);
    }
}

TEST(Syndrome, DecodeMeasureReencodeStyle) {
    Layout l(4);
    auto reg = Register::for_layout(l);
    std::mt19937_64 rng(41);
    for (const auto &c : l.constraints()) {
        auto circ = syndrome_circuit(l, c, SyndromeStyle::DecodeMeasureReencode);
        EXPECT_TRUE(within_constraints(circ, l));
        auto s = Statevector::random(reg.size(), 4, rng, 5);
        s.run(encode_full(l).circuit, reg);
        auto before = s;
        auto faulty = s;
        s.run(circ, reg);
        EXPECT_EQ(s.measurements().back(), 0);
        EXPECT_NEAR(fidelity_up_to_phase(s, before), 1.0, 1e-12);
        faulty.x(reg.index_of(c.qubits.front()));
        faulty.run(circ, reg);
        EXPECT_EQ(faulty.measurements().back(), 1);
    }
}

}  // namespace
}  // namespace parity
