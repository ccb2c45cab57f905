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

#ifndef QSWE_EXACT_SIM_HPP
#define QSWE_EXACT_SIM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "qswe/circuit.hpp"

namespace qswe {

/// Element of Z[i]. All simulator arithmetic is exact.
struct GaussianInt {
    mpz_class re;
    mpz_class im;

    GaussianInt() = default;
    GaussianInt(mpz_class real, mpz_class imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussianInt(long real) : re(real) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    /// Multiplication by i^t, t in {0,1,2,3}.
    GaussianInt times_i_pow(unsigned t) const;

    mpz_class norm2() const { return re * re + im * im; }

    bool operator==(const GaussianInt&) const = default;

    std::string str() const;  // "a", "bi", "a+bi", "a-bi"
};

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

/// Dense 2^n x 2^n matrix of Gaussian integers representing
/// entries / (k^2+l^2)^{scale/2}. Real circuits produce purely real entries.
struct ScaledMatrix {
    std::size_t n = 0;
    std::size_t scale = 0;  // number of gate factors absorbed
    std::vector<GaussianInt> entries;

    std::size_t dim() const { return std::size_t{1} << n; }
    GaussianInt& at(std::size_t r, std::size_t c) { return entries[r * dim() + c]; }
    const GaussianInt& at(std::size_t r, std::size_t c) const { return entries[r * dim() + c]; }

    bool is_real() const;
    GaussianInt trace() const;
};

/// Unnormalized product: each factor contributes k*I + epsilon*i*l*sigma_b
/// exactly; divide by (k^2+l^2)^{N/2} to get U.
ScaledMatrix circuit_unitary(const Circuit& c, std::size_t dense_limit = kDefaultDenseLimit);

struct ScaledAmplitude {
    GaussianInt value;   // <0...0| entries |0...0>
    std::size_t scale;   // N
    std::uint32_t k, l;  // promise arithmetic inputs
};

/// Top-left entry of the unnormalized matrix.
ScaledAmplitude amplitude00(const Circuit& c, std::size_t dense_limit = kDefaultDenseLimit);

struct ScaledTrace {
    GaussianInt value;  // trace of the unnormalized matrix
    std::size_t scale;  // N
    std::size_t n;      // normalized trace divides by 2^n additionally
    std::uint32_t k, l;
};

ScaledTrace normalized_trace(const Circuit& c, std::size_t dense_limit = kDefaultDenseLimit);

/// Sign of the amplitude under the promise |amp| >= 1/2, checked exactly as
/// 4*|value|^2 >= (k^2+l^2)^N. Throws PromiseViolation when the promise
/// fails and std::domain_error when the amplitude is not real.
int sign_with_promise(const ScaledAmplitude& a);

/// Sign of tr U under the promise |tr U / 2^n| >= 1/2, checked exactly as
/// 4*|value|^2 >= 4^n * (k^2+l^2)^N.
int sign_with_promise(const ScaledTrace& t);

enum class RamModel {
    kQram,   // all qubits start in |0>
    kQ1ram,  // first qubit |0>, the others uniformly random basic states
};

/// Exact probability that measuring the first qubit (qubit 0, the most
/// significant basis-index bit) yields 1 after applying the circuit.
mpq_class prob_first_qubit_one(const Circuit& c, RamModel model,
                               std::size_t dense_limit = kDefaultDenseLimit);

/// Sign of 2p-1 under the promise |2p-1| >= 1/2.
int sign_bias_with_promise(const mpq_class& p);

}  // namespace qswe

#endif
