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

// Times the Gray-walk kernel against the serial reference evaluator and
// reports thread scaling. All runs must produce the same integer.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "qswe/enumerator.hpp"
#include "qswe/random_gen.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_once(const std::function<mpz_class()>& f, mpz_class& out) {
    const auto start = Clock::now();
    out = f();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t kernel_dim = 22;
    std::size_t max_threads = 8;
    std::uint64_t seed = 0;
    CLI::App app{"qswe enumerator benchmark"};
    app.add_option("--kernel-dim", kernel_dim, "kernel dimension of the instance (2^d terms)");
    app.add_option("--max-threads", max_threads, "largest worker count to time");
    app.add_option("--seed", seed, "instance seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    qswe::QsweInstance inst = qswe::random_instance(rng, kernel_dim, 0, 9);
    std::cout << "instance: n = " << kernel_dim << ", unconstrained (kernel dimension "
              << kernel_dim << "), x = " << inst.x << ", y = " << inst.y << "\n";

    qswe::EvalOptions opts;
    opts.kernel_limit = kernel_dim;

    mpz_class reference;
    if (kernel_dim <= 20) {
        const double t = time_once([&] { return qswe::eval_naive(inst); }, reference);
        std::cout << "eval_naive (serial reference)  " << t << " s\n";
    }

    double serial_time = 0;
    mpz_class serial_value;
    for (std::size_t threads = 1; threads <= max_threads; threads *= 2) {
        setenv("QSWE_THREADS", std::to_string(threads).c_str(), 1);
        mpz_class value;
        const double t = time_once([&] { return qswe::eval(inst, opts); }, value);
        if (threads == 1) {
            serial_time = t;
            serial_value = value;
        }
        const double steps = static_cast<double>(std::uint64_t{1} << kernel_dim);
        std::cout << "eval, " << threads << " worker(s): " << t << " s  ("
                  << steps / t / 1e6 << " Msteps/s, speedup " << serial_time / t << "x)\n";
        if (value != serial_value || (kernel_dim <= 20 && value != reference)) {
            std::cout << "MISMATCH: evaluators disagree\n";
            return 1;
        }
    }
    unsetenv("QSWE_THREADS");
    std::cout << "S = " << serial_value.get_str() << "\n";
    return 0;
}
