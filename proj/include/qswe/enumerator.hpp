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

#ifndef QSWE_ENUMERATOR_HPP
#define QSWE_ENUMERATOR_HPP

#include <gmpxx.h>

#include <cstdint>

#include "qswe/bitmat.hpp"

namespace qswe {

/// Largest kernel dimension eval walks by default (2^28 Gray steps).
inline constexpr std::size_t kDefaultKernelLimit = 28;

/// S(A, B, x, y) = sum over {b : A b = 0} of (-1)^{b^T B b} x^|b| y^{n-|b|},
/// with A an m x n constraint matrix and B an n x n sign form.
struct QsweInstance {
    BitMatrix a;
    BitMatrix b;
    std::uint32_t x = 4;
    std::uint32_t y = 3;
};

/// Throws std::invalid_argument unless shapes agree and x, y >= 1.
void check_instance(const QsweInstance& inst);

struct EvalOptions {
    std::size_t kernel_limit = kDefaultKernelLimit;
};

/// Exact value of the sum. Walks the 2^d kernel elements in Gray-code order
/// with incremental weight and sign updates; work is split across workers by
/// fixing the top kernel coordinates (QSWE_THREADS caps the worker count,
/// absent means one). The result is identical for every worker count.
mpz_class eval(const QsweInstance& inst, const EvalOptions& opts = {});

/// Reference implementation: loops over all 2^n vectors testing A b = 0
/// directly. Requires n <= 20.
mpz_class eval_naive(const QsweInstance& inst);

/// Sign of S under the promise |S| >= (x^2+y^2)^{n/2}/2, decided exactly by
/// comparing 4 S^2 with (x^2+y^2)^n. Throws PromiseViolation (carrying S)
/// when the promise fails; S = 0 always fails.
int sign_with_promise(const QsweInstance& inst, const EvalOptions& opts = {});

/// Promise check for an already-computed S of this instance.
int sign_of_value_with_promise(const mpz_class& s, const QsweInstance& inst);

enum class ShapeTag {
    kGeneral,
    kP3,  // A square, diag(A) = I, B = lwtr(A)
    kP4,  // A = [C; C^T] with diag(C) = I, B = lwtr(C)
};

ShapeTag classify_shape(const QsweInstance& inst);

const char* shape_name(ShapeTag tag);

}  // namespace qswe

#endif
