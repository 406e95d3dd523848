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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/pauli.hpp"

namespace parity {

using Complex = std::complex<double>;

/// Hard cap on simulated register size (an n=6 chip has 21 qubits).
inline constexpr int kMaxSimQubits = 24;

/// Maps qubit labels to statevector bit positions. Qubit 0 is the least
/// significant bit of the basis index.
class Register {
   public:
    Register() = default;
    explicit Register(std::vector<QubitId> qubits) : qubits_(std::move(qubits)) {
        for (size_t k = 0; k < qubits_.size(); k++) {
            if (!index_.emplace(qubits_[k], static_cast<int>(k)).second) {
                throw std::invalid_argument("duplicate qubit " + qubits_[k].str() + " in register");
            }
        }
    }

    /// All chip qubits in canonical order, followed by the given ancillas.
    static Register for_layout(const Layout &layout, std::vector<QubitId> ancillas = {}) {
        std::vector<QubitId> qs = layout.qubits();
        std::sort(ancillas.begin(), ancillas.end());
        ancillas.erase(std::unique(ancillas.begin(), ancillas.end()), ancillas.end());
        for (const auto &a : ancillas) {
            layout.require(a);
            qs.push_back(a);
        }
        return Register(std::move(qs));
    }

    /// Chip register plus whatever ancillas the circuit mentions.
    static Register for_circuit(const Layout &layout, const Circuit &c) {
        std::vector<QubitId> anc;
        for (const auto &g : c.gates) {
            if (g.q0.is_ancilla()) {
                anc.push_back(g.q0);
            }
            if (g.arity() == 2 && g.q1.is_ancilla()) {
                anc.push_back(g.q1);
            }
        }
        return for_layout(layout, std::move(anc));
    }

    /// Only the qubits the circuit touches, in canonical order.
    static Register compact(const Circuit &c) {
        std::set<QubitId> seen;
        for (const auto &g : c.gates) {
            seen.insert(g.q0);
            if (g.arity() == 2) {
                seen.insert(g.q1);
            }
        }
        return Register(std::vector<QubitId>(seen.begin(), seen.end()));
    }

    int size() const { return static_cast<int>(qubits_.size()); }
    const std::vector<QubitId> &qubits() const { return qubits_; }

    int index_of(const QubitId &q) const {
        auto it = index_.find(q);
        if (it == index_.end()) {
            throw std::out_of_range("qubit " + q.str() + " is not in the register");
        }
        return it->second;
    }

   private:
    std::vector<QubitId> qubits_;
    std::map<QubitId, int> index_;
};

/// Dense statevector over q qubits with a seeded RNG for measurements.
class Statevector {
   public:
    explicit Statevector(int num_qubits, std::uint64_t seed = 0) : num_qubits_(num_qubits), rng_(seed) {
        if (num_qubits < 0 || num_qubits > kMaxSimQubits) {
            throw std::invalid_argument("statevector size " + std::to_string(num_qubits) + " exceeds the " +
                                        std::to_string(kMaxSimQubits) + "-qubit simulation cap");
        }
        amps_.assign(size_t{1} << num_qubits, Complex(0.0, 0.0));
        amps_[0] = 1.0;
    }

    static Statevector basis(int num_qubits, std::uint64_t index, std::uint64_t seed = 0) {
        Statevector sv(num_qubits, seed);
        if (index >= sv.amps_.size()) {
            throw std::out_of_range("basis index out of range");
        }
        sv.amps_[0] = 0.0;
        sv.amps_[index] = 1.0;
        return sv;
    }

    /// Wraps given amplitudes (normalized on entry).
    static Statevector from_amplitudes(std::vector<Complex> amps, std::uint64_t seed = 0) {
        if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
            throw std::invalid_argument("amplitude count must be a power of two");
        }
        int q = std::countr_zero(amps.size());
        Statevector sv(q, seed);
        sv.amps_ = std::move(amps);
        sv.normalize();
        return sv;
    }

    /// Haar-random state on the low `active` qubits, |0> on the rest.
    static Statevector random(int num_qubits, int active, std::mt19937_64 &rng, std::uint64_t seed = 0) {
        Statevector sv(num_qubits, seed);
        std::normal_distribution<double> gauss;
        size_t dim = size_t{1} << active;
        for (size_t k = 0; k < dim; k++) {
            sv.amps_[k] = Complex(gauss(rng), gauss(rng));
        }
        sv.normalize();
        return sv;
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    std::vector<Complex> &amplitudes() { return amps_; }
    const std::vector<int> &measurements() const { return measurements_; }

    double norm() const {
        double s = 0.0;
        for (const auto &a : amps_) {
            s += std::norm(a);
        }
        return std::sqrt(s);
    }

    void normalize() {
        double nrm = norm();
        if (nrm == 0.0) {
            throw std::invalid_argument("cannot normalize the zero vector");
        }
        for (auto &a : amps_) {
            a /= nrm;
        }
    }

    void cnot(int control, int target) {
        check(control);
        check(target);
        if (control == target) {
            throw std::invalid_argument("CNOT control and target coincide");
        }
        size_t cm = size_t{1} << control;
        size_t tm = size_t{1} << target;
        for (size_t k = 0; k < amps_.size(); k++) {
            if ((k & cm) && !(k & tm)) {
                std::swap(amps_[k], amps_[k | tm]);
            }
        }
    }

    void x(int q) {
        check(q);
        size_t m = size_t{1} << q;
        for (size_t k = 0; k < amps_.size(); k++) {
            if (!(k & m)) {
                std::swap(amps_[k], amps_[k | m]);
            }
        }
    }

    void rz(int q, double theta) {
        check(q);
        size_t m = size_t{1} << q;
        Complex lo = std::polar(1.0, -theta / 2);
        Complex hi = std::polar(1.0, theta / 2);
        for (size_t k = 0; k < amps_.size(); k++) {
            amps_[k] *= (k & m) ? hi : lo;
        }
    }

    /// Applies [[m00, m01], [m10, m11]] to qubit q.
    void apply_1q(int q, Complex m00, Complex m01, Complex m10, Complex m11) {
        check(q);
        size_t m = size_t{1} << q;
        for (size_t k = 0; k < amps_.size(); k++) {
            if (!(k & m)) {
                Complex a = amps_[k];
                Complex b = amps_[k | m];
                amps_[k] = m00 * a + m01 * b;
                amps_[k | m] = m10 * a + m11 * b;
            }
        }
    }

    void rx(int q, double theta) {
        double c = std::cos(theta / 2);
        double s = std::sin(theta / 2);
        apply_1q(q, c, Complex(0, -s), Complex(0, -s), c);
    }

    void h(int q) {
        const double r = 1.0 / std::sqrt(2.0);
        apply_1q(q, r, r, r, -r);
    }

    /// Probability that qubit q reads 1.
    double probability_one(int q) const {
        check(q);
        size_t m = size_t{1} << q;
        double p = 0.0;
        for (size_t k = 0; k < amps_.size(); k++) {
            if (k & m) {
                p += std::norm(amps_[k]);
            }
        }
        return p;
    }

    int measure_z(int q) {
        double p1 = probability_one(q);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        int outcome = uni(rng_) < p1 ? 1 : 0;
        size_t m = size_t{1} << q;
        double keep = outcome ? p1 : 1.0 - p1;
        double scale = 1.0 / std::sqrt(keep);
        for (size_t k = 0; k < amps_.size(); k++) {
            bool bit = (k & m) != 0;
            amps_[k] = (bit == (outcome == 1)) ? amps_[k] * scale : Complex(0.0, 0.0);
        }
        measurements_.push_back(outcome);
        return outcome;
    }

    /// Resets qubit q to |0>. Only legal when q is already in a definite Z
    /// state (fresh or just measured); a superposed qubit is rejected.
    void init0(int q, double tol = 1e-12) {
        double p1 = probability_one(q);
        if (p1 <= tol) {
            return;
        }
        if (p1 >= 1.0 - tol) {
            x(q);
            return;
        }
        throw std::logic_error("INIT0 on qubit " + std::to_string(q) +
                               " which is not in a definite Z state (P(1)=" + std::to_string(p1) + ")");
    }

    void apply(const PhysicalGate &g, const Register &reg) {
        int a = reg.index_of(g.q0);
        switch (g.kind) {
            case GateKind::CNOT:
                cnot(a, reg.index_of(g.q1));
                break;
            case GateKind::RX:
                rx(a, g.angle);
                break;
            case GateKind::RZ:
                rz(a, g.angle);
                break;
            case GateKind::X:
                x(a);
                break;
            case GateKind::H:
                h(a);
                break;
            case GateKind::INIT0:
                init0(a);
                break;
            case GateKind::MEASURE_Z:
                measure_z(a);
                break;
        }
    }

    void run(const Circuit &c, const Register &reg) {
        for (const auto &g : c.gates) {
            apply(g, reg);
        }
    }

    /// <psi|P|psi> for a Hermitian Pauli string.
    double expectation(const PauliString &p, const Register &reg) const {
        std::uint64_t xmask = 0;
        std::uint64_t zmask = 0;
        int ys = 0;
        for (const auto &[q, op] : p.ops()) {
            std::uint64_t bit = std::uint64_t{1} << reg.index_of(q);
            auto bits = static_cast<std::uint8_t>(op);
            if (bits & 1) {
                xmask |= bit;
            }
            if (bits & 2) {
                zmask |= bit;
            }
            if (op == Pauli::Y) {
                ys++;
            }
        }
        // P = i^{ys} X^x Z^z, so <psi|P|psi> = sum_k conj(a[k ^ x]) i^ys (-1)^{|k & z|} a[k].
        Complex phase = std::pow(Complex(0, 1), ys);
        Complex acc = 0.0;
        for (size_t k = 0; k < amps_.size(); k++) {
            double sign = (std::popcount(k & zmask) & 1) ? -1.0 : 1.0;
            acc += std::conj(amps_[k ^ xmask]) * amps_[k] * sign;
        }
        return (phase * acc).real();
    }

   private:
    void check(int q) const {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
        }
    }

    int num_qubits_;
    std::vector<Complex> amps_;
    std::mt19937_64 rng_;
    std::vector<int> measurements_;
};

inline Complex inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("statevector sizes differ");
    }
    Complex acc = 0.0;
    const auto &x = a.amplitudes();
    const auto &y = b.amplitudes();
    for (size_t k = 0; k < x.size(); k++) {
        acc += std::conj(x[k]) * y[k];
    }
    return acc;
}

/// |<a|b>|^2, insensitive to global phase.
inline double fidelity_up_to_phase(const Statevector &a, const Statevector &b) {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

/// Probability mass outside the data-qubit subspace (data qubits are the low
/// n register bits).
inline double non_data_population(const Statevector &sv, int n) {
    size_t dim = size_t{1} << n;
    double mass = 0.0;
    const auto &amps = sv.amplitudes();
    for (size_t k = dim; k < amps.size(); k++) {
        mass += std::norm(amps[k]);
    }
    return mass;
}

/// The n-qubit data state, provided every parity/ancilla qubit is in |0>.
///
/// Tracing the parity qubits out of an entangled state would silently drop
/// phase information, so a state with residual population is rejected.
inline Statevector reduced_data_state(const Statevector &sv, const Layout &layout, double tol = 1e-10) {
    int n = layout.n();
    if (sv.num_qubits() < layout.num_qubits()) {
        throw std::invalid_argument("statevector does not cover the layout");
    }
    double residual = non_data_population(sv, n);
    if (residual > tol) {
        throw std::runtime_error("parity qubits are not disentangled from the data (residual population " +
                                 std::to_string(residual) + ")");
    }
    std::vector<Complex> amps(sv.amplitudes().begin(), sv.amplitudes().begin() + (std::ptrdiff_t{1} << n));
    return Statevector::from_amplitudes(std::move(amps));
}

/// Dense row-major complex matrix.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<Complex> data;

    explicit DenseMatrix(size_t d = 0) : dim(d), data(d * d, Complex(0.0, 0.0)) {}
    Complex &operator()(size_t r, size_t c) { return data[r * dim + c]; }
    Complex operator()(size_t r, size_t c) const { return data[r * dim + c]; }
};

inline constexpr int kMaxUnitaryQubits = 10;

/// Unitary of a circuit on the given register, column by column.
inline DenseMatrix unitary_of(const Circuit &c, const Register &reg) {
    if (reg.size() > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary_of supports at most " + std::to_string(kMaxUnitaryQubits) +
                                    " qubits, got " + std::to_string(reg.size()));
    }
    if (!c.is_unitary()) {
        throw std::invalid_argument("unitary_of needs a unitary-only circuit");
    }
    size_t dim = size_t{1} << reg.size();
    DenseMatrix u(dim);
    for (size_t col = 0; col < dim; col++) {
        auto sv = Statevector::basis(reg.size(), col);
        sv.run(c, reg);
        for (size_t row = 0; row < dim; row++) {
            u(row, col) = sv.amplitudes()[row];
        }
    }
    return u;
}

/// Max elementwise |a - e^{i phi} b| with phi aligned on a's largest entry.
inline double max_deviation_up_to_phase(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix sizes differ");
    }
    size_t pivot = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        if (std::abs(a.data[k]) > std::abs(a.data[pivot])) {
            pivot = k;
        }
    }
    Complex phase = 1.0;
    if (std::abs(b.data[pivot]) > 0.0) {
        phase = a.data[pivot] / b.data[pivot];
        phase /= std::abs(phase);
    }
    double dev = 0.0;
    for (size_t k = 0; k < a.data.size(); k++) {
        dev = std::max(dev, std::abs(a.data[k] - phase * b.data[k]));
    }
    return dev;
}

}  // namespace parity
