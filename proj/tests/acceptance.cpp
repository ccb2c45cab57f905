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

// End-to-end identity suite. Each criterion prints one PASS/FAIL line;
// every comparison is exact (tolerance zero) and the stated wall-clock
// budgets are enforced.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qswe/circuit.hpp"
#include "qswe/enumerator.hpp"
#include "qswe/errors.hpp"
#include "qswe/exact_sim.hpp"
#include "qswe/random_gen.hpp"
#include "qswe/reduction.hpp"

namespace {

using namespace qswe;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    const auto start = Clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (failure.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
        std::ostringstream msg;
        msg << "exceeded the " << budget_seconds << " s budget (" << elapsed << " s)";
        failure = msg.str();
    }
    std::cout << "criterion " << std::setw(2) << number << " "
              << (failure.empty() ? "PASS" : "FAIL") << "  (" << std::fixed
              << std::setprecision(2) << elapsed << " s)  " << name;
    if (!failure.empty()) {
        std::cout << "  [" << failure << "]";
        ++g_failures;
    }
    std::cout << "\n";
}

void require(bool cond, const std::string& msg) {
    if (!cond) {
        throw std::runtime_error(msg);
    }
}

mpz_class real_amplitude(const Circuit& c) {
    const ScaledAmplitude a = amplitude00(c);
    require(a.value.is_real(), "amplitude has an imaginary part");
    return a.value.re;
}

struct KlPair {
    std::uint32_t k, l;
};
constexpr KlPair kKlPairs[] = {{4, 3}, {2, 1}, {5, 2}};

BitMatrix random_bits(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

BitMatrix random_rank_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        return BitMatrix(m, n);
    }
    const std::size_t r = rng() % (std::min(m, n) + 1);
    return mat_mul(random_bits(rng, m, r), random_bits(rng, r, n));
}

BitMatrix random_diag_identity(std::mt19937_64& rng, std::size_t n) {
    BitMatrix a = random_bits(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.set(i, i, true);
    }
    return a;
}

// Random (h0, h1) with diag(h0^T h1) = I, as full_rank_replacement needs.
std::pair<BitMatrix, BitMatrix> random_replacement_input(std::mt19937_64& rng, std::size_t n,
                                                   std::size_t cols) {
    BitMatrix h0 = random_bits(rng, n, cols);
    BitMatrix h1 = random_bits(rng, n, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        if (h1.col(j).is_zero()) {
            h1.set(rng() % n, j, true);
        }
        if (!h0.col(j).dot(h1.col(j))) {
            std::size_t r = 0;
            while (!h1.get(r, j)) {
                ++r;
            }
            h0.set(r, j, !h0.get(r, j));
        }
    }
    return {h0, h1};
}

void set_threads(const char* value) {
    if (value == nullptr) {
        unsetenv("QSWE_THREADS");
    } else {
        setenv("QSWE_THREADS", value, 1);
    }
}

}  // namespace

int main() {
    criterion(1, "convention regression: Y,Y at (4,3)", 1.0, [] {
        Circuit yy;
        yy.n = 1;
        yy.k = 4;
        yy.l = 3;
        yy.gates.assign(2, Gate{PauliIndex::from_string("Y"), -1});
        require(eval(amplitude_instance(yy)) == 7, "amplitude eval != 7");
        const ScaledAmplitude amp = amplitude00(yy);
        require(amp.value == GaussianInt(7) && amp.scale == 2, "simulated amplitude != 7/25");
        require(eval(trace_instance(yy)) == 7, "trace eval != 7");
    });

    std::vector<Circuit> corpus;
    {
        std::mt19937_64 rng(1001);
        for (int t = 0; t < 200; ++t) {
            const KlPair kl = kKlPairs[t % 3];
            corpus.push_back(random_conforming_circuit(rng, 1 + rng() % 5, rng() % 13, kl.k, kl.l));
        }
    }

    criterion(2, "amplitude identity on 200 random conforming circuits", 60.0, [&corpus] {
        for (const Circuit& c : corpus) {
            require(eval(amplitude_instance(c)) == real_amplitude(c),
                    "amplitude identity failed");
        }
    });

    criterion(3, "trace identity and 2^n divisibility on the same corpus", 60.0, [&corpus] {
        for (const Circuit& c : corpus) {
            const ScaledTrace t = normalized_trace(c);
            require(t.value.is_real(), "trace has an imaginary part");
            mpz_class two_n;
            mpz_ui_pow_ui(two_n.get_mpz_t(), 2, c.n);
            require(t.value.re % two_n == 0, "trace not divisible by 2^n");
            require(eval(trace_instance(c)) * two_n == t.value.re, "trace identity failed");
        }
    });

    criterion(4, "operator-level path-sum identity on 50 circuits", 30.0, [] {
        std::mt19937_64 rng(1004);
        for (int t = 0; t < 50; ++t) {
            const KlPair kl = kKlPairs[t % 3];
            const std::size_t n = 1 + rng() % 3;
            const std::size_t gates = rng() % 9;
            const Circuit c = random_conforming_circuit(rng, n, gates, kl.k, kl.l);
            const ExpansionData e = expand(c);
            const std::size_t dim = std::size_t{1} << n;
            std::vector<mpz_class> sum(dim * dim, 0);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << gates); ++bits) {
                BitVector a(gates);
                for (std::size_t g = 0; g < gates; ++g) {
                    a.set(g, (bits >> g) & 1);
                }
                SignedPauli term{PauliIndex(n), expansion_sign(e.h, a) ? -1 : +1};
                term.index.bits = mat_vec(e.h, a);
                mpz_class coef = 1;
                for (std::size_t g = 0; g < gates; ++g) {
                    coef *= a.get(g) ? kl.l : kl.k;
                }
                const auto dense = to_matrix(term);
                for (std::size_t idx = 0; idx < dim * dim; ++idx) {
                    if (dense[idx] != 0) {
                        sum[idx] += coef * dense[idx];
                    }
                }
            }
            const ScaledMatrix u = circuit_unitary(c);
            for (std::size_t idx = 0; idx < dim * dim; ++idx) {
                require(u.entries[idx].im == 0 && u.entries[idx].re == sum[idx],
                        "path-sum matrix differs from the gate product");
            }
        }
    });

    criterion(5, "full-rank replacement on 200 random (H0, H1) pairs", 0, [] {
        std::mt19937_64 rng(1005);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + rng() % 8;
            const std::size_t cols = n + rng() % (13 - n);
            const auto [h0, h1] = random_replacement_input(rng, n, cols);
            const BitMatrix h2 = full_rank_replacement(h0, h1);
            require(rank(h2) == n, "H2 not full rank");
            const BitMatrix g0 = mat_mul(h0.transposed(), h1);
            const BitMatrix g2 = mat_mul(h2.transposed(), h1);
            require(lwtr(g2) == lwtr(g0), "lwtr changed");
            for (std::size_t j = 0; j < cols; ++j) {
                require(g2.get(j, j), "diag not identity");
            }
            const std::uint32_t x = 1 + rng() % 9;
            const std::uint32_t y = 1 + rng() % 9;
            const QsweInstance original{h1, lwtr(g0), x, y};
            const QsweInstance replaced{g2, lwtr(g0), x, y};
            require(eval_naive(original) == eval_naive(replaced),
                    "sum changed under constraint replacement");
        }
    });

    criterion(6, "rank factorization on 200 random matrices", 0, [] {
        std::mt19937_64 rng(1006);
        for (int t = 0; t < 200; ++t) {
            const std::size_t m = 1 + rng() % 12;
            const std::size_t n = 1 + rng() % 12;
            const BitMatrix c = random_rank_matrix(rng, m, n);
            const RankFactorization f = factor_rank(c);
            const std::size_t r = rank(c);
            require(mat_mul(f.x, f.y.transposed()) == c, "X Y^T != C");
            require(f.x.cols() == r && f.y.cols() == r, "column counts");
            require(rank(f.x) == r && rank(f.y) == r, "columns not independent");
        }
    });

    criterion(7, "phase-qubit embedding on 100 mixed circuits", 0, [] {
        std::mt19937_64 rng(1007);
        for (int t = 0; t < 100; ++t) {
            const KlPair kl = kKlPairs[t % 2];  // {(4,3),(2,1)}
            const Circuit c = random_mixed_circuit(rng, 1 + rng() % 3, rng() % 7, kl.k, kl.l);
            require(r_map_check(c), "R U(G') != U(G) R");
            const Circuit embedded = embed_real(c);
            require(validate_real(embedded).tag != RealityTag::kComplex,
                    "embedded circuit is not real");
            require(eval(amplitude_instance(embedded)) == real_amplitude(embedded),
                    "amplitude identity failed on the embedded circuit");
        }
    });

    criterion(8, "P3/P4 round trips on 100 random instances each", 0, [] {
        std::mt19937_64 rng(1008);
        for (int t = 0; t < 100; ++t) {
            const KlPair kl = kKlPairs[t % 3];
            const std::size_t n = 1 + rng() % 10;
            const BitMatrix a = random_diag_identity(rng, n);
            const Circuit c = p3_to_circuit(a, kl.k, kl.l);
            const QsweInstance back = canonicalize_p3(c);
            const QsweInstance direct{a, lwtr(a), kl.l, kl.k};
            require(back.a == a && back.b == direct.b, "P3 round trip altered the instance");
            require(eval(back) == eval(direct), "P3 round trip changed the value");
        }
        for (int t = 0; t < 100; ++t) {
            const KlPair kl = kKlPairs[t % 3];
            const std::size_t n = 1 + rng() % 10;
            const BitMatrix cmat = random_diag_identity(rng, n);
            const Circuit c = p4_to_circuit(cmat, kl.k, kl.l);
            const QsweInstance direct{vstack(cmat, cmat.transposed()), lwtr(cmat), kl.l, kl.k};
            require(eval(trace_instance(c)) == eval(direct), "P4 round trip changed the value");
        }
    });

    criterion(9, "evaluator equivalence, bound, and kernel-24 performance", 30.0, [] {
        std::mt19937_64 rng(1009);
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = rng() % 17;
            const std::size_t m = rng() % 10;
            QsweInstance inst = random_instance(rng, n, m, 9);
            inst.a = random_rank_matrix(rng, m, n);
            const mpz_class fast = eval(inst);
            require(fast == eval_naive(inst), "eval != eval_naive");
            mpz_class bound;
            const mpz_class base = mpz_class(inst.x) + inst.y;
            mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), n);
            require(abs(fast) <= bound, "|S| exceeds (x+y)^n");
        }

        QsweInstance deep;
        deep.a = BitMatrix(2, 24);  // zero constraints: kernel dimension 24
        deep.b = random_bits(rng, 24, 24);
        deep.x = 4;
        deep.y = 3;
        set_threads("1");
        const mpz_class serial = eval(deep);
        set_threads("4");
        const mpz_class parallel = eval(deep);
        set_threads(nullptr);
        require(serial == parallel, "QSWE_THREADS changed the result");
    });

    criterion(10, "promise arithmetic against independent comparisons", 0, [] {
        std::mt19937_64 rng(1010);
        auto slow_power = [](const mpz_class& base, std::size_t e) {
            mpz_class p = 1;
            for (std::size_t i = 0; i < e; ++i) {
                p *= base;
            }
            return p;
        };
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = rng() % 11;
            QsweInstance inst = random_instance(rng, n, rng() % 6, 9);
            inst.a = random_rank_matrix(rng, inst.a.rows(), n);
            const mpz_class s = eval_naive(inst);
            const mpz_class lhs = mpz_class(4) * s * s;
            const mpz_class rhs =
                slow_power(mpz_class(inst.x) * inst.x + mpz_class(inst.y) * inst.y, n);
            bool lib_holds = true;
            int lib_sign = 0;
            try {
                lib_sign = sign_with_promise(inst);
            } catch (const PromiseViolation& e) {
                lib_holds = false;
                require(e.value() == s, "violation does not carry S");
            }
            require(lib_holds == (lhs >= rhs), "promise decision differs");
            if (lib_holds) {
                require(lib_sign == (s > 0 ? 1 : -1), "sign differs");
            }
        }
        for (int t = 0; t < 60; ++t) {
            const Circuit c = random_mixed_circuit(rng, 1 + rng() % 3, rng() % 6, 4, 3);
            for (const RamModel model : {RamModel::kQram, RamModel::kQ1ram}) {
                const mpq_class p = prob_first_qubit_one(c, model);
                const mpq_class bias = 2 * p - 1;
                bool lib_holds = true;
                int lib_sign = 0;
                try {
                    lib_sign = sign_bias_with_promise(p);
                } catch (const PromiseViolation&) {
                    lib_holds = false;
                }
                const bool holds = bias >= mpq_class(1, 2) || bias <= mpq_class(-1, 2);
                require(lib_holds == holds, "bias promise decision differs");
                if (holds) {
                    require(lib_sign == (bias > 0 ? 1 : -1), "bias sign differs");
                }
            }
        }
    });

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
