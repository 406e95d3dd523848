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


// Command-line front end: layout, encode, compile, simulate, verify, errors.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
// A JSON run manifest (arguments, seed, version, timestamp) goes to stderr
// so that stdout stays byte-identical across reruns.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parity/parity.hpp"

namespace {

using parity::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Manifest {
    std::string subcommand;
    std::vector<std::string> args;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

void emit_manifest(const Manifest &m) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    Json j = {{"tool", "parity"},
              {"version", parity::kVersion},
              {"subcommand", m.subcommand},
              {"args", m.args},
              {"timestamp", stamp}};
    j["seed"] = m.has_seed ? Json(m.seed) : Json(nullptr);
    std::cerr << "# manifest " << j.dump() << "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to `path`, or stdout when path is empty or "-".
void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

void require_n(int n) {
    if (n < 2) {
        throw UsageError("--n must be at least 2, got " + std::to_string(n));
    }
}

parity::LoweringOptions lowering(const std::string &site, bool peephole) {
    parity::LoweringOptions opts;
    opts.peephole = peephole;
    if (site == "center") {
        opts.site = parity::RotationSite::Center;
    } else if (site == "data") {
        opts.site = parity::RotationSite::Data;
    } else {
        throw UsageError("--site must be center or data");
    }
    return opts;
}

/// Loads a logical circuit and reconciles its width with --n.
parity::LogicalCircuit load_logical(const std::string &path, int n) {
    auto c = parity::parse_logical(read_file(path), n);
    if (c.n != n) {
        throw UsageError("circuit in '" + path + "' has n=" + std::to_string(c.n) + " but --n is " +
                         std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------------------

int cmd_layout(int n, const std::string &output) {
    require_n(n);
    parity::Layout layout(n);
    write_output(output, parity::to_json(layout).dump(2) + "\n");
    return kExitOk;
}

int cmd_encode(int n, bool reverse, const std::string &format, const std::string &output) {
    require_n(n);
    parity::Layout layout(n);
    auto steps = parity::encode_steps(layout);
    if (reverse) {
        std::reverse(steps.begin(), steps.end());
    }
    parity::Circuit c(n, reverse ? "decode" : "encode");
    std::vector<size_t> sizes;
    for (auto &step : steps) {
        if (reverse) {
            std::reverse(step.begin(), step.end());
        }
        sizes.push_back(step.size());
        c.gates.insert(c.gates.end(), step.begin(), step.end());
    }
    if (format == "json") {
        write_output(output, parity::to_json(c).dump(2) + "\n");
    } else if (format == "text") {
        write_output(output, parity::to_text(c, sizes));
    } else {
        throw UsageError("--format must be json or text");
    }
    return kExitOk;
}

std::string report_csv(const parity::Layout &layout, const parity::LogicalCircuit &logical,
                       const parity::LoweringOptions &opts, const parity::Circuit &total) {
    std::ostringstream out;
    out << "gate,single_qubit,two_qubit,depth,table1_expected,match\n";
    for (const auto &g : logical.gates) {
        auto compiled = parity::compile_gate(layout, g, opts);
        auto row = parity::table1_row(g, layout.n());
        std::string label = parity::logical_name(g.kind);
        for (int k = 0; k < g.arity(); k++) {
            label += (k == 0 ? "(" : " ") + std::to_string(g.targets[k]);
        }
        label += ")";
        bool ok = parity::matches_table1(compiled.resources, row);
        if (g.kind == parity::LogicalKind::CNOT) {
            // single-qubit count and depth bound are required; the two-qubit
            // target is reported separately in the match column
            bool sq = compiled.resources.single_qubit == row.single_qubit;
            bool cx = compiled.resources.two_qubit == row.two_qubit;
            out << label << ',' << compiled.resources.single_qubit << ',' << compiled.resources.two_qubit << ','
                << compiled.resources.depth << ',' << row.str() << ','
                << (sq && cx ? "yes" : sq ? "gap" : "no") << "\n";
            continue;
        }
        out << label << ',' << compiled.resources.single_qubit << ',' << compiled.resources.two_qubit << ','
            << compiled.resources.depth << ',' << row.str() << ',' << (ok ? "yes" : "no") << "\n";
    }
    auto r = parity::count_resources(total, true);
    out << "total," << r.single_qubit << ',' << r.two_qubit << ',' << r.depth << ",,\n";
    return out.str();
}

int cmd_compile(const std::string &input, int n, bool peephole, const std::string &site, const std::string &output,
                const std::string &format, bool report) {
    require_n(n);
    parity::Layout layout(n);
    auto logical = load_logical(input, n);
    auto opts = lowering(site, peephole);
    auto physical = parity::compile_circuit(layout, logical, opts);
    if (!parity::validate_locality(physical, layout).empty()) {
        throw std::logic_error("compiled circuit is not nearest-neighbor");
    }
    if (!report || !output.empty()) {
        std::string text;
        if (format == "json") {
            text = parity::to_json(physical).dump(2) + "\n";
        } else if (format == "text") {
            text = parity::to_text(physical);
        } else {
            throw UsageError("--format must be json or text");
        }
        write_output(output, text);
    }
    if (report) {
        std::cout << report_csv(layout, logical, opts, physical);
    }
    return kExitOk;
}

Json amplitudes_json(const parity::Statevector &sv, const parity::Register &reg) {
    Json amps = Json::array();
    const auto &a = sv.amplitudes();
    for (size_t k = 0; k < a.size(); k++) {
        if (std::norm(a[k]) < 1e-24) {
            continue;
        }
        std::string bits;
        for (int q = 0; q < reg.size(); q++) {
            bits += ((k >> q) & 1) ? '1' : '0';
        }
        amps.push_back({{"index", k}, {"bits", bits}, {"re", a[k].real()}, {"im", a[k].imag()}});
    }
    return amps;
}

int cmd_simulate(const std::string &circuit_path, int n_flag, const std::string &input, std::uint64_t seed,
                 bool encode, bool decode) {
    std::string text = read_file(circuit_path);
    parity::Circuit physical;
    auto first = text.find_first_not_of(" \t\r\n");
    bool is_json = first != std::string::npos && text[first] == '{';
    if (is_json && parity::circuit_space(parity::detail::parse_json_text(text)) == parity::CircuitSpace::Logical) {
        auto logical = parity::parse_logical_json(text);
        physical = parity::compile_circuit(parity::Layout(logical.n), logical);
    } else {
        physical = parity::parse_physical(text, n_flag > 0 ? n_flag : 2);
    }
    if (n_flag > 0 && physical.n != n_flag) {
        throw UsageError("circuit has n=" + std::to_string(physical.n) + " but --n is " + std::to_string(n_flag));
    }
    require_n(physical.n);
    parity::Layout layout(physical.n);
    parity::validate_operands(physical, layout);
    auto reg = parity::Register::for_circuit(layout, physical);
    if (reg.size() > parity::kMaxSimQubits) {
        throw UsageError("register of " + std::to_string(reg.size()) + " qubits exceeds the simulation cap of " +
                         std::to_string(parity::kMaxSimQubits));
    }
    const int n = layout.n();
    parity::Statevector sv(reg.size(), seed);
    if (input == "random") {
        std::mt19937_64 rng(seed);
        sv = parity::Statevector::random(reg.size(), n, rng, seed);
    } else {
        if (input.size() != static_cast<size_t>(n) && input.size() != static_cast<size_t>(reg.size())) {
            throw UsageError("--input must be 'random' or a bit string of length " + std::to_string(n) + " or " +
                             std::to_string(reg.size()));
        }
        std::uint64_t index = 0;
        for (size_t k = 0; k < input.size(); k++) {
            if (input[k] != '0' && input[k] != '1') {
                throw UsageError("--input bit string may only contain 0 and 1");
            }
            index |= static_cast<std::uint64_t>(input[k] == '1') << k;
        }
        sv = parity::Statevector::basis(reg.size(), index, seed);
    }
    if (encode) {
        sv.run(parity::encode_full(layout).circuit, reg);
    }
    sv.run(physical, reg);
    if (decode) {
        sv.run(parity::decode_full(layout).circuit, reg);
    }
    Json qubits = Json::array();
    for (const auto &q : reg.qubits()) {
        qubits.push_back(q.str());
    }
    Json out = {{"n", n},
                {"seed", seed},
                {"qubits", qubits},
                {"measurements", sv.measurements()},
                {"amplitudes", amplitudes_json(sv, reg)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string &input, int n, std::uint64_t seed, size_t trials, const std::string &physical_path,
               bool peephole, const std::string &site) {
    require_n(n);
    if (parity::Layout(n).num_qubits() > parity::kMaxSimQubits) {
        throw UsageError("n=" + std::to_string(n) + " needs " + std::to_string(n * (n + 1) / 2) +
                         " qubits, above the simulation cap of " + std::to_string(parity::kMaxSimQubits) +
                         " (n <= 6)");
    }
    if (trials < 1) {
        throw UsageError("--trials must be positive");
    }
    parity::Layout layout(n);
    auto logical = load_logical(input, n);
    parity::Circuit physical;
    if (!physical_path.empty()) {
        physical = parity::parse_physical(read_file(physical_path), n);
        if (physical.n != n) {
            throw UsageError("physical circuit has n=" + std::to_string(physical.n) + " but --n is " +
                             std::to_string(n));
        }
        parity::validate_operands(physical, layout);
    } else {
        physical = parity::compile_circuit(layout, logical, lowering(site, peephole));
    }
    auto rep = parity::check_equivalence(layout, physical, logical, trials, seed);
    bool pass = rep.passed();
    char line[256];
    std::snprintf(line, sizeof(line), "n=%d trials=%zu seed=%llu min_fidelity=%.15f max_residual=%.3e result=%s\n",
                  n, trials, static_cast<unsigned long long>(seed), rep.min_fidelity, rep.max_residual,
                  pass ? "PASS" : "FAIL");
    std::cout << line;
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_errors(const std::string &n_list, const std::string &grid, std::uint64_t mc_trials, std::uint64_t seed,
               bool per_line, const std::string &output) {
    std::vector<int> ns;
    std::vector<double> ps;
    try {
        ns = parity::parse_int_list(n_list);
        ps = parity::parse_grid(grid);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    for (int n : ns) {
        require_n(n);
    }
    for (double p : ps) {
        if (!(p >= 0.0 && p <= 0.5)) {
            throw UsageError("p_phys values must lie in [0, 0.5]");
        }
    }
    parity::SweepOptions opts;
    opts.mc_trials = mc_trials;
    opts.seed = seed;
    opts.counting = per_line ? parity::FlipCounting::PerLine : parity::FlipCounting::ChipWide;
    std::ostringstream out;
    parity::write_sweep_csv(out, parity::sweep(ns, ps, opts));
    write_output(output, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Parity-architecture compiler and verification toolkit", "parity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", parity::kVersion);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "Do not print the run manifest to stderr");

    int n = 0;
    std::string output, format = "json", input, site = "center", physical_path, circuit_path;
    std::string n_list = "3,5,7,9", grid = "1e-5:1e-2:log20";
    bool reverse = false, peephole = false, report = false, do_encode = false, do_decode = false, per_line = false;
    std::uint64_t seed = 0, mc_trials = 0;
    size_t trials = 50;

    auto *layout_cmd = app.add_subcommand("layout", "Emit the chip layout as JSON");
    layout_cmd->add_option("--n", n, "Number of logical qubits")->required();
    layout_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    layout_cmd->add_option("--output,-o", output, "Output file (default stdout)");

    auto *encode_cmd = app.add_subcommand("encode", "Emit the depth n+1 encoding circuit");
    encode_cmd->add_option("--n", n, "Number of logical qubits")->required();
    encode_cmd->add_flag("--reverse", reverse, "Emit the decoding circuit instead");
    encode_cmd->add_option("--format", format, "json or text");
    encode_cmd->add_option("--output,-o", output, "Output file (default stdout)");

    auto *compile_cmd = app.add_subcommand("compile", "Lower a logical circuit to physical gates");
    compile_cmd->add_option("--input", input, "Logical circuit (JSON or text)")->required();
    compile_cmd->add_option("--n", n, "Number of logical qubits")->required();
    compile_cmd->add_flag("--peephole", peephole, "Run the CNOT cancellation pass");
    compile_cmd->add_option("--site", site, "Rotation site for Rx: center or data");
    compile_cmd->add_option("--output,-o", output, "Physical circuit output file (default stdout)");
    compile_cmd->add_option("--format", format, "json or text");
    compile_cmd->add_flag("--report", report, "Print a per-gate resource table (CSV) to stdout");

    auto *simulate_cmd = app.add_subcommand("simulate", "Run a circuit on the statevector simulator");
    simulate_cmd->add_option("--circuit", circuit_path, "Physical or logical circuit file")->required();
    simulate_cmd->add_option("--n", n, "Number of logical qubits (checked against the circuit)");
    simulate_cmd->add_option("--input", input, "'random' or a bit string, qubit 0 first")->required();
    simulate_cmd->add_option("--seed", seed, "RNG seed for random inputs and measurements");
    simulate_cmd->add_flag("--encode", do_encode, "Encode the input before running the circuit");
    simulate_cmd->add_flag("--decode", do_decode, "Decode after running the circuit");

    auto *verify_cmd = app.add_subcommand("verify", "Check compiled circuits against the logical reference");
    verify_cmd->add_option("--input", input, "Logical circuit (JSON or text)")->required();
    verify_cmd->add_option("--n", n, "Number of logical qubits (at most 6)")->required();
    verify_cmd->add_option("--seed", seed, "RNG seed for random states");
    verify_cmd->add_option("--trials", trials, "Number of random logical states");
    verify_cmd->add_option("--physical", physical_path, "Check this physical circuit instead of compiling");
    verify_cmd->add_flag("--peephole", peephole, "Compile with the CNOT cancellation pass");
    verify_cmd->add_option("--site", site, "Rotation site for Rx: center or data");

    auto *errors_cmd = app.add_subcommand("errors", "Logical error rate sweep (CSV)");
    errors_cmd->add_option("--n-list", n_list, "Comma-separated code sizes");
    errors_cmd->add_option("--pphys-grid", grid, "a:b:logN, a:b:linN or a comma list");
    errors_cmd->add_option("--mc", mc_trials, "Monte Carlo trials per grid point (adds columns)");
    errors_cmd->add_option("--seed", seed, "Monte Carlo master seed");
    errors_cmd->add_flag("--per-line", per_line, "Count scenario (a) flips per logical line");
    errors_cmd->add_option("--output,-o", output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Manifest manifest;
    manifest.args.assign(argv + 1, argv + argc);
    auto *sub = app.get_subcommands().front();
    manifest.subcommand = sub->get_name();
    manifest.has_seed = sub->get_option_no_throw("--seed") != nullptr;
    manifest.seed = seed;
    if (!quiet) {
        emit_manifest(manifest);
    }

    try {
        if (sub == layout_cmd) {
            return cmd_layout(n, output);
        }
        if (sub == encode_cmd) {
            return cmd_encode(n, reverse, format, output);
        }
        if (sub == compile_cmd) {
            return cmd_compile(input, n, peephole, site, output, format, report);
        }
        if (sub == simulate_cmd) {
            return cmd_simulate(circuit_path, n, input, seed, do_encode, do_decode);
        }
        if (sub == verify_cmd) {
            return cmd_verify(input, n, seed, trials, physical_path, peephole, site);
        }
        if (sub == errors_cmd) {
            return cmd_errors(n_list, grid, mc_trials, seed, per_line, output);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parity::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
