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

#ifndef QSWE_TESTS_TEST_UTIL_HPP
#define QSWE_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>

#include "qswe/bitmat.hpp"

namespace qswe::testing {

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

inline BitVector random_vector(std::mt19937_64& rng, std::size_t len) {
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.set(i, rng() & 1);
    }
    return v;
}

/// Unpacks an integer counter into a length-n BitVector, bit 0 first.
inline BitVector vector_from_counter(std::uint64_t counter, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, (counter >> i) & 1);
    }
    return v;
}

}  // namespace qswe::testing

#endif
