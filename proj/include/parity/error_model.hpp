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
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace parity {

/// How scenario (a) flips are counted against the correctable threshold.
enum class FlipCounting {
    ChipWide,  // all K qubits together (conservative)
    PerLine,   // each logical line separately
};

/// Bit-flip noise model of one syndrome cycle on an n-logical-qubit chip.
struct ErrorParams {
    double p1 = 0.0;  // per qubit, before each syndrome round
    double p2 = 0.0;  // per qubit per CNOT
    double pI = 0.0;  // ancilla initialization
    double pM = 0.0;  // ancilla measurement
    int n = 3;
    FlipCounting counting = FlipCounting::ChipWide;

    static ErrorParams uniform(int n, double p, FlipCounting counting = FlipCounting::ChipWide) {
        return {p, p, p, p, n, counting};
    }

    void validate() const {
        for (double p : {p1, p2, pI, pM}) {
            if (!(p >= 0.0 && p <= 0.5)) {
                throw std::invalid_argument("error probabilities must lie in [0, 0.5], got " + std::to_string(p));
            }
        }
        if (n < 2) {
            throw std::invalid_argument("error model needs n >= 2");
        }
    }

    int num_qubits() const { return n * (n + 1) / 2; }
    int num_constraints() const { return n * (n - 1) / 2; }
};

enum class EstimateMethod { ClosedForm, MonteCarlo };

struct ErrorReport {
    double p_round_flip = 0.0;      // per qubit, per round
    double p_syndrome_fault = 0.0;  // per syndrome readout
    double p_a = 0.0;
    double p_b = 0.0;
    double p_L = 0.0;
    EstimateMethod method = EstimateMethod::ClosedForm;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double std_error = 0.0;  // binomial standard error of p_L (Monte Carlo only)
};

/// Each qubit sees this many CNOTs per syndrome round (4-body plaquettes,
/// 4 plaquettes per qubit; an upper bound at the boundary).
inline constexpr int kCnotsPerRound = 4;

/// Probability of an odd number of events among independent flips with the
/// given probabilities: (1 - prod(1 - 2 p_k)) / 2.
inline double odd_parity_probability(std::initializer_list<std::pair<double, int>> events) {
    double log_prod = 0.0;
    for (const auto &[p, count] : events) {
        if (p >= 0.5) {
            return 0.5;  // a fair coin anywhere makes the parity fair
        }
        log_prod += count * std::log1p(-2.0 * p);
    }
    return -0.5 * std::expm1(log_prod);
}

inline double round_flip_probability(const ErrorParams &params) {
    params.validate();
    return odd_parity_probability({{params.p1, 1}, {params.p2, kCnotsPerRound}});
}

inline double syndrome_fault_probability(const ErrorParams &params) {
    params.validate();
    return odd_parity_probability({{params.pI, 1}, {params.pM, 1}, {params.p2, kCnotsPerRound}});
}

/// Number of simultaneous flips the code corrects: floor((n - 1) / 2).
inline int correctable_flips(int n) { return (n - 1) / 2; }

/// P(X >= k) for X ~ Binomial(trials, p), summed in log space.
inline double binomial_upper_tail(int trials, double p, int k) {
    if (k <= 0) {
        return 1.0;
    }
    if (k > trials || p <= 0.0) {
        return 0.0;
    }
    if (p >= 1.0) {
        return 1.0;
    }
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    const double lfact_n = std::lgamma(trials + 1.0);
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(trials - k + 1));
    double peak = -std::numeric_limits<double>::infinity();
    for (int m = k; m <= trials; m++) {
        double t = lfact_n - std::lgamma(m + 1.0) - std::lgamma(trials - m + 1.0) + m * lp + (trials - m) * lq;
        terms.push_back(t);
        peak = std::max(peak, t);
    }
    double acc = 0.0;
    for (double t : terms) {
        acc += std::exp(t - peak);
    }
    return std::min(1.0, std::exp(peak + std::log(acc)));
}

/// 1 - (1 - p)^times without cancellation for tiny p.
inline double any_of(double p, double times) {
    if (p >= 1.0) {
        return 1.0;
    }
    return -std::expm1(times * std::log1p(-p));
}

/// More than floor((n-1)/2) flips between two syndrome rounds, in any of the
/// n rounds of a cycle.
inline double scenario_a_probability(const ErrorParams &params) {
    const double q = round_flip_probability(params);
    const int n = params.n;
    const int threshold = correctable_flips(n) + 1;
    double per_round = 0.0;
    if (params.counting == FlipCounting::ChipWide) {
        per_round = binomial_upper_tail(params.num_qubits(), q, threshold);
    } else {
        // Lines share parity qubits, so their failures are positively
        // correlated; treating them as independent overestimates slightly.
        per_round = any_of(binomial_upper_tail(n, q, threshold), n);
    }
    return any_of(per_round, n);
}

/// A majority (ties included) of the n repeated readouts of some constraint
/// are faulty.
inline double scenario_b_probability(const ErrorParams &params) {
    const double s = syndrome_fault_probability(params);
    const int n = params.n;
    const double per_constraint = binomial_upper_tail(n, s, (n + 1) / 2);
    return any_of(per_constraint, params.num_constraints());
}

/// Closed-form logical failure probability of one cycle, treating the two
/// scenarios as independent.
inline ErrorReport logical_error_probability(const ErrorParams &params) {
    ErrorReport r;
    r.p_round_flip = round_flip_probability(params);
    r.p_syndrome_fault = syndrome_fault_probability(params);
    r.p_a = scenario_a_probability(params);
    r.p_b = scenario_b_probability(params);
    r.p_L = r.p_a + r.p_b - r.p_a * r.p_b;
    r.method = EstimateMethod::ClosedForm;
    return r;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// xoshiro256** seeded through splitmix64.
class Xoshiro256 {
   public:
    explicit Xoshiro256(std::uint64_t seed) {
        for (auto &s : state_) {
            seed = splitmix64(seed);
            s = seed;
        }
    }
    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

struct McCounts {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t any = 0;
};

inline constexpr std::uint64_t kTrialsPerBlock = 1024;

inline McCounts run_block(const ErrorParams &params, double q, double s, std::uint64_t trials, std::uint64_t seed) {
    const int n = params.n;
    const int threshold = correctable_flips(n);
    const int num_qubits = params.num_qubits();
    const int num_constraints = params.num_constraints();
    Xoshiro256 rng(seed);
    McCounts counts;
    std::vector<int> line_flips(static_cast<size_t>(n));
    for (std::uint64_t t = 0; t < trials; t++) {
        bool fail_a = false;
        for (int round = 0; round < n; round++) {
            if (params.counting == FlipCounting::ChipWide) {
                int flips = 0;
                for (int k = 0; k < num_qubits; k++) {
                    flips += rng.uniform() < q;
                }
                fail_a |= flips > threshold;
            } else {
                std::fill(line_flips.begin(), line_flips.end(), 0);
                for (int i = 0; i < n; i++) {
                    line_flips[i] += rng.uniform() < q;
                    for (int j = i + 1; j < n; j++) {
                        if (rng.uniform() < q) {
                            line_flips[i]++;
                            line_flips[j]++;
                        }
                    }
                }
                for (int v : line_flips) {
                    fail_a |= v > threshold;
                }
            }
        }
        bool fail_b = false;
        for (int c = 0; c < num_constraints; c++) {
            int faulty = 0;
            for (int rep = 0; rep < n; rep++) {
                faulty += rng.uniform() < s;
            }
            fail_b |= 2 * faulty >= n;
        }
        counts.a += fail_a;
        counts.b += fail_b;
        counts.any += fail_a || fail_b;
    }
    return counts;
}

}  // namespace detail

/// Direct sampling of the same fault model: per round, K independent qubit
/// flips with the per-round flip probability; per constraint, n independent
/// faulty readouts. Trials are split into fixed blocks with sub-seeds derived
/// from `seed`, so the result does not depend on `threads`.
inline ErrorReport monte_carlo_logical_error(const ErrorParams &params, std::uint64_t trials, std::uint64_t seed,
                                             unsigned threads = 0) {
    if (trials < 1) {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
    const double q = round_flip_probability(params);
    const double s = syndrome_fault_probability(params);
    const std::uint64_t blocks = (trials + detail::kTrialsPerBlock - 1) / detail::kTrialsPerBlock;
    std::vector<detail::McCounts> per_block(blocks);
    auto work = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t b = first; b < blocks; b += stride) {
            std::uint64_t count = std::min(detail::kTrialsPerBlock, trials - b * detail::kTrialsPerBlock);
            per_block[b] = detail::run_block(params, q, s, count, detail::splitmix64(seed ^ detail::splitmix64(b)));
        }
    };
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t, threads);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    detail::McCounts total;
    for (const auto &c : per_block) {
        total.a += c.a;
        total.b += c.b;
        total.any += c.any;
    }
    ErrorReport r;
    r.p_round_flip = q;
    r.p_syndrome_fault = s;
    const double N = static_cast<double>(trials);
    r.p_a = static_cast<double>(total.a) / N;
    r.p_b = static_cast<double>(total.b) / N;
    r.p_L = static_cast<double>(total.any) / N;
    r.method = EstimateMethod::MonteCarlo;
    r.trials = trials;
    r.seed = seed;
    r.std_error = std::sqrt(r.p_L * (1.0 - r.p_L) / N);
    return r;
}

/// Binomial standard error of an N-trial estimate of probability p.
inline double binomial_std_error(double p, std::uint64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

struct SweepRow {
    int n = 0;
    double p_phys = 0.0;
    ErrorReport closed_form;
    bool has_mc = false;
    ErrorReport monte_carlo;
};

struct SweepOptions {
    std::uint64_t mc_trials = 0;  // 0 disables Monte Carlo
    std::uint64_t seed = 0;
    FlipCounting counting = FlipCounting::ChipWide;
};

/// Evaluates p1 = p2 = pI = pM = p_phys over the grid. Monte Carlo sub-seeds
/// depend only on the master seed and the row position.
inline std::vector<SweepRow> sweep(const std::vector<int> &ns, const std::vector<double> &ps,
                                   const SweepOptions &opts = {}) {
    std::vector<SweepRow> rows;
    std::uint64_t row_index = 0;
    for (int n : ns) {
        for (double p : ps) {
            auto params = ErrorParams::uniform(n, p, opts.counting);
            SweepRow row{n, p, logical_error_probability(params), false, {}};
            if (opts.mc_trials > 0) {
                row.has_mc = true;
                row.monte_carlo =
                    monte_carlo_logical_error(params, opts.mc_trials, detail::splitmix64(opts.seed + row_index));
            }
            rows.push_back(row);
            row_index++;
        }
    }
    return rows;
}

inline void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    bool mc = !rows.empty() && rows.front().has_mc;
    out << "n,p_phys,p_a,p_b,p_L";
    if (mc) {
        out << ",p_a_mc,p_b_mc,p_L_mc,se_mc";
    }
    out << "\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    for (const auto &r : rows) {
        out << r.n << ',' << num(r.p_phys) << ',' << num(r.closed_form.p_a) << ',' << num(r.closed_form.p_b) << ','
            << num(r.closed_form.p_L);
        if (mc) {
            out << ',' << num(r.monte_carlo.p_a) << ',' << num(r.monte_carlo.p_b) << ',' << num(r.monte_carlo.p_L)
                << ',' << num(r.monte_carlo.std_error);
        }
        out << "\n";
    }
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double> &xs, const std::vector<double> &ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two matching points");
    }
    double mx = 0, my = 0;
    const double m = static_cast<double>(xs.size());
    for (size_t k = 0; k < xs.size(); k++) {
        mx += std::log(xs[k]) / m;
        my += std::log(ys[k]) / m;
    }
    double sxy = 0, sxx = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        double dx = std::log(xs[k]) - mx;
        sxy += dx * (std::log(ys[k]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

/// Parses a p_phys grid: "a:b:logN" (N log-spaced points), "a:b:linN"
/// (N evenly spaced points), or a comma-separated list.
inline std::vector<double> parse_grid(const std::string &text) {
    auto num = [&](const std::string &tok) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) {
            throw std::invalid_argument("bad number '" + tok + "' in grid '" + text + "'");
        }
        return v;
    };
    std::vector<double> out;
    auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            out.push_back(num(tok));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        return out;
    }
    auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw std::invalid_argument("grid '" + text + "' must look like a:b:logN or a:b:linN");
    }
    double lo = num(text.substr(0, c1));
    double hi = num(text.substr(c1 + 1, c2 - c1 - 1));
    std::string mode = text.substr(c2 + 1);
    bool log_mode = mode.rfind("log", 0) == 0;
    if (!log_mode && mode.rfind("lin", 0) != 0) {
        throw std::invalid_argument("grid '" + text + "': spacing must be logN or linN");
    }
    double count_d = num(mode.substr(3));
    int count = static_cast<int>(count_d);
    if (count < 1 || count != count_d) {
        throw std::invalid_argument("grid '" + text + "': point count must be a positive integer");
    }
    if (log_mode && (lo <= 0.0 || hi <= 0.0)) {
        throw std::invalid_argument("grid '" + text + "': log spacing needs positive bounds");
    }
    for (int k = 0; k < count; k++) {
        double t = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
        out.push_back(log_mode ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo));
    }
    return out;
}

/// Parses "3,5,7" into integers.
inline std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) {
            throw std::invalid_argument("bad integer '" + tok + "' in list '" + text + "'");
        }
        out.push_back(v);
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

}  // namespace parity
