// Copyright 2026 The qswe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qswe/circuit.hpp"
#include "qswe/enumerator.hpp"
#include "qswe/errors.hpp"
#include "qswe/exact_sim.hpp"
#include "qswe/io.hpp"
#include "qswe/random_gen.hpp"
#include "qswe/reduction.hpp"

namespace {

using namespace qswe;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    return in;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_circuit(in);
}

QsweInstance load_instance(const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_instance(in);
}

std::pair<std::uint32_t, std::uint32_t> parse_kl(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--kl expects 'k,l'");
    }
    const unsigned long k = std::stoul(spec.substr(0, comma));
    const unsigned long l = std::stoul(spec.substr(comma + 1));
    if (k < 1 || l < 1 || k > 0xffffffffUL || l > 0xffffffffUL) {
        throw std::invalid_argument("--kl components must be positive 32-bit integers");
    }
    return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l)};
}

// "5^N" when k^2+l^2 is a perfect square, else "sqrt(k^2+l^2)^N".
std::string root_power(std::uint32_t k, std::uint32_t l, std::size_t n) {
    const mpz_class base = mpz_class(k) * k + mpz_class(l) * l;
    if (mpz_perfect_square_p(base.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), base.get_mpz_t());
        return root.get_str() + "^" + std::to_string(n);
    }
    return "sqrt(" + base.get_str() + ")^" + std::to_string(n);
}

int cmd_eval(const std::string& path, bool naive, bool sign) {
    const QsweInstance inst = load_instance(path);
    const mpz_class s = naive ? eval_naive(inst) : eval(inst);
    if (sign) {
        std::cout << (sign_of_value_with_promise(s, inst) > 0 ? "+" : "-") << "\n";
    } else {
        std::cout << s.get_str() << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& path, const std::string& target, bool canonical) {
    const Circuit c = load_circuit(path);
    QsweInstance inst;
    if (canonical) {
        if (target != "amplitude") {
            throw std::invalid_argument("--canonical applies to --target amplitude only");
        }
        inst = canonicalize_p3(c);
    } else if (target == "amplitude") {
        inst = amplitude_instance(c);
    } else {
        inst = trace_instance(c);
    }
    std::ostringstream comment;
    comment << "scale " << c.gates.size() << " k " << c.k << " l " << c.l;
    std::cout << format_instance(inst, comment.str());
    return 0;
}

// A bare matrix file defines a P3/P4 instance by itself (B = lwtr, shared
// k,l); an instance file carries its own x and y.
bool looks_like_matrix_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        return line == "gf2-matrix v1";
    }
    return false;
}

int cmd_circuit(const std::string& path, const std::string& from, const std::string& kl) {
    if (looks_like_matrix_file(path)) {
        std::ifstream in = open_input(path);
        const BitMatrix m = parse_matrix(in);
        const auto [k, l] = parse_kl(kl);
        std::cout << format_circuit(from == "p3" ? p3_to_circuit(m, k, l)
                                                 : p4_to_circuit(m, k, l));
        return 0;
    }
    const QsweInstance inst = load_instance(path);
    const ShapeTag shape = classify_shape(inst);
    if (from == "p3") {
        if (shape != ShapeTag::kP3) {
            throw std::invalid_argument(
                "instance is not P3-shaped (need A square, diag(A) = I, B = lwtr(A)); got " +
                std::string(shape_name(shape)));
        }
        std::cout << format_circuit(p3_to_circuit(inst.a, inst.y, inst.x));
    } else {
        if (shape != ShapeTag::kP4) {
            throw std::invalid_argument(
                "instance is not P4-shaped (need A = [C;C^T], diag(C) = I, B = lwtr(C)); got " +
                std::string(shape_name(shape)));
        }
        const std::size_t n = inst.a.cols();
        BitMatrix c(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            c.set_row(i, inst.a.row(i));
        }
        std::cout << format_circuit(p4_to_circuit(c, inst.y, inst.x));
    }
    return 0;
}

int cmd_sim(const std::string& path, const std::string& what, const std::string& model,
            bool sign, std::size_t dense_limit) {
    const Circuit c = load_circuit(path);
    if (what == "amplitude") {
        const ScaledAmplitude a = amplitude00(c, dense_limit);
        if (sign) {
            std::cout << (sign_with_promise(a) > 0 ? "+" : "-") << "\n";
        } else {
            std::cout << a.value.str() << " / " << root_power(a.k, a.l, a.scale) << "\n";
        }
    } else if (what == "trace") {
        const ScaledTrace t = normalized_trace(c, dense_limit);
        if (sign) {
            std::cout << (sign_with_promise(t) > 0 ? "+" : "-") << "\n";
        } else {
            std::cout << t.value.str() << " / (" << root_power(t.k, t.l, t.scale) << " * 2^"
                      << t.n << ")\n";
        }
    } else {
        const RamModel ram = model == "q1ram" ? RamModel::kQ1ram : RamModel::kQram;
        const mpq_class p = prob_first_qubit_one(c, ram, dense_limit);
        if (sign) {
            std::cout << (sign_bias_with_promise(p) > 0 ? "+" : "-") << "\n";
        } else {
            std::cout << p.get_str() << "\n";
        }
    }
    return 0;
}

int cmd_embed(const std::string& path) {
    std::cout << format_circuit(embed_real(load_circuit(path)));
    return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t qubits, std::size_t gates, std::size_t trials,
               const std::string& kl) {
    const auto [k, l] = parse_kl(kl);
    if (qubits > kDefaultDenseLimit) {
        throw std::invalid_argument("verify: --qubits exceeds the dense limit of " +
                                    std::to_string(kDefaultDenseLimit));
    }
    if (gates > kDefaultKernelLimit) {
        throw std::invalid_argument("verify: --gates exceeds the kernel limit of " +
                                    std::to_string(kDefaultKernelLimit));
    }
    if (qubits == 0 && gates > 0) {
        throw std::invalid_argument("verify: need at least one qubit");
    }
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Circuit c = random_conforming_circuit(rng, qubits, gates, k, l);
        std::string failure;
        try {
            const ScaledMatrix u = circuit_unitary(c);
            const GaussianInt amp = u.at(0, 0);
            const GaussianInt tr = u.trace();
            if (!u.is_real()) {
                failure = "unitary has imaginary entries";
            }
            const mpz_class amp_eval = eval(amplitude_instance(c));
            if (failure.empty() && amp_eval != amp.re) {
                failure = "amplitude identity: " + amp_eval.get_str() + " != " + amp.re.get_str();
            }
            mpz_class two_n;
            mpz_ui_pow_ui(two_n.get_mpz_t(), 2, c.n);
            const mpz_class trace_eval = eval(trace_instance(c));
            if (failure.empty() && trace_eval * two_n != tr.re) {
                failure = "trace identity: " + trace_eval.get_str() + " * 2^n != " + tr.re.get_str();
            }
            const QsweInstance canonical = canonicalize_p3(c);
            if (failure.empty() && classify_shape(canonical) != ShapeTag::kP3) {
                failure = "canonical instance is not P3-shaped";
            }
            if (failure.empty() && eval(canonical) != amp_eval) {
                failure = "canonical eval differs from amplitude eval";
            }
        } catch (const std::exception& e) {
            failure = e.what();
        }
        if (failure.empty()) {
            std::cout << "trial " << t << ": PASS\n";
        } else {
            std::cout << "trial " << t << ": FAIL (" << failure << ")\n";
            ++failures;
        }
    }
    std::cout << (trials - failures) << "/" << trials << " trials passed\n";
    return failures == 0 ? 0 : static_cast<int>(ExitStatus::kInternalInvariant);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratically signed weight enumerators: exact evaluation, circuit "
                 "reductions, and an exact simulator oracle"};
    app.require_subcommand(1);

    std::string path;
    bool naive = false;
    bool sign = false;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate S(A,B,x,y) for an instance file");
    eval_cmd->add_option("instance", path, "instance file")->required();
    eval_cmd->add_flag("--naive", naive, "use the 2^n reference evaluator");
    eval_cmd->add_flag("--sign", sign, "print the promised sign instead of the value");

    std::string target = "amplitude";
    bool canonical = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "turn a real circuit into an instance file");
    reduce_cmd->add_option("circuit", path, "circuit file")->required();
    reduce_cmd->add_option("--target", target, "amplitude or trace")
        ->check(CLI::IsMember({"amplitude", "trace"}));
    reduce_cmd->add_flag("--canonical", canonical, "emit the Problem-3 canonical form");

    std::string from = "p3";
    std::string circuit_kl = "4,3";
    auto* circuit_cmd =
        app.add_subcommand("circuit", "turn a P3/P4 instance or gf2-matrix into a circuit");
    circuit_cmd->add_option("instance", path, "instance or gf2-matrix file")->required();
    circuit_cmd->add_option("--from", from, "instance shape")
        ->check(CLI::IsMember({"p3", "p4"}));
    circuit_cmd->add_option("--kl", circuit_kl, "rotation parameters for matrix input");

    std::string what = "amplitude";
    std::string model = "qram";
    std::size_t dense_limit = kDefaultDenseLimit;
    auto* sim_cmd = app.add_subcommand("sim", "exact simulation oracle");
    sim_cmd->add_option("circuit", path, "circuit file")->required();
    sim_cmd->add_option("--what", what, "amplitude, trace, or prob")
        ->check(CLI::IsMember({"amplitude", "trace", "prob"}));
    sim_cmd->add_option("--model", model, "initial state model for prob")
        ->check(CLI::IsMember({"qram", "q1ram"}));
    sim_cmd->add_flag("--sign", sign, "print the promised sign instead of the value");
    sim_cmd->add_option("--dense-limit", dense_limit, "max qubits for dense matrices");

    auto* embed_cmd = app.add_subcommand("embed-real", "embed a circuit into a real one");
    embed_cmd->add_option("circuit", path, "circuit file")->required();

    std::uint64_t seed = 0;
    std::size_t qubits = 3;
    std::size_t gates = 8;
    std::size_t trials = 25;
    std::string kl = "4,3";
    auto* verify_cmd =
        app.add_subcommand("verify", "randomized cross-checks of the reduction identities");
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--qubits", qubits, "qubits per trial circuit");
    verify_cmd->add_option("--gates", gates, "gates per trial circuit");
    verify_cmd->add_option("--trials", trials, "number of trials");
    verify_cmd->add_option("--kl", kl, "rotation parameters 'k,l'");

    auto* gen_cmd = app.add_subcommand("gen", "emit random fixtures");
    bool mixed = false;
    std::size_t inst_n = 6;
    std::size_t inst_m = 3;
    std::uint32_t max_xy = 9;
    auto* gen_circuit = gen_cmd->add_subcommand("circuit", "random real conforming circuit");
    gen_circuit->add_option("--seed", seed, "generator seed");
    gen_circuit->add_option("--qubits", qubits, "qubit count");
    gen_circuit->add_option("--gates", gates, "gate count");
    gen_circuit->add_option("--kl", kl, "rotation parameters 'k,l'");
    gen_circuit->add_flag("--mixed", mixed, "allow complex and nonconforming gates");
    std::size_t mat_rows = 4;
    std::size_t mat_cols = 4;
    auto* gen_matrix = gen_cmd->add_subcommand("matrix", "random gf2 matrix");
    gen_matrix->add_option("--seed", seed, "generator seed");
    gen_matrix->add_option("--rows", mat_rows, "row count");
    gen_matrix->add_option("--cols", mat_cols, "column count");
    auto* gen_instance = gen_cmd->add_subcommand("instance", "random instance");
    gen_instance->add_option("--seed", seed, "generator seed");
    gen_instance->add_option("--n", inst_n, "columns of A");
    gen_instance->add_option("--m", inst_m, "rows of A");
    gen_instance->add_option("--max-xy", max_xy, "upper bound for x and y");
    gen_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(qswe::ExitStatus::kUsage);
    }

    try {
        if (*eval_cmd) {
            return cmd_eval(path, naive, sign);
        }
        if (*reduce_cmd) {
            return cmd_reduce(path, target, canonical);
        }
        if (*circuit_cmd) {
            return cmd_circuit(path, from, circuit_kl);
        }
        if (*sim_cmd) {
            return cmd_sim(path, what, model, sign, dense_limit);
        }
        if (*embed_cmd) {
            return cmd_embed(path);
        }
        if (*verify_cmd) {
            return cmd_verify(seed, qubits, gates, trials, kl);
        }
        if (*gen_cmd) {
            const auto [k, l] = parse_kl(kl);
            std::mt19937_64 rng(seed);
            if (*gen_circuit) {
                const Circuit c = mixed ? random_mixed_circuit(rng, qubits, gates, k, l)
                                        : random_conforming_circuit(rng, qubits, gates, k, l);
                std::cout << format_circuit(c);
            } else if (*gen_matrix) {
                BitMatrix m(mat_rows, mat_cols);
                for (std::size_t i = 0; i < mat_rows; ++i) {
                    for (std::size_t j = 0; j < mat_cols; ++j) {
                        m.set(i, j, rng() & 1);
                    }
                }
                std::cout << format_matrix(m);
            } else {
                std::cout << format_instance(random_instance(rng, inst_n, inst_m, max_xy));
            }
            return 0;
        }
    } catch (const qswe::PromiseViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(qswe::ExitStatus::kPromiseViolated);
    } catch (const qswe::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(qswe::ExitStatus::kInternalInvariant);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(qswe::ExitStatus::kUsage);
    }
    return 0;
}
