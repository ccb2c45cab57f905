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

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qswe/pauli.hpp"
#include "test_util.hpp"

using namespace qswe;

namespace {

PauliIndex random_pauli(std::mt19937_64& rng, std::size_t n) {
    PauliIndex p(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.set_pair(q, rng() & 1, rng() & 1);
    }
    return p;
}

std::vector<std::int8_t> dense_mul(const std::vector<std::int8_t>& a,
                                   const std::vector<std::int8_t>& b, std::size_t dim) {
    std::vector<std::int8_t> out(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (a[i * dim + k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out[i * dim + j] =
                    static_cast<std::int8_t>(out[i * dim + j] + a[i * dim + k] * b[k * dim + j]);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("pauli string round trip and pair encoding") {
    const PauliIndex p = PauliIndex::from_string("IXYZ");
    CHECK(p.n == 4);
    CHECK(!p.z(0));
    CHECK(!p.x(0));
    CHECK(!p.z(1));
    CHECK(p.x(1));
    CHECK(p.z(2));
    CHECK(p.x(2));
    CHECK(p.z(3));
    CHECK(!p.x(3));
    CHECK(p.str() == "IXYZ");
    CHECK_THROWS_AS(PauliIndex::from_string("AB"), std::invalid_argument);
}

TEST_CASE("y_count and pauli_weight") {
    CHECK(y_count(PauliIndex::from_string("Y")) == 1);
    CHECK(y_count(PauliIndex::from_string("YXZ")) == 1);
    CHECK(y_count(PauliIndex::from_string("YY")) == 2);
    CHECK(pauli_weight(PauliIndex(3)) == 0);
    CHECK(pauli_weight(PauliIndex::from_string("IX")) == 1);
    CHECK(pauli_weight(PauliIndex::from_string("ZYX")) == 3);
}

TEST_CASE("quad_form worked examples") {
    const PauliIndex y1 = PauliIndex::from_string("Y");
    CHECK(quad_form(y1, y1) == true);
    CHECK(quad_form(PauliIndex::from_string("X"), PauliIndex::from_string("Z")) == false);
    CHECK(quad_form(PauliIndex::from_string("Z"), PauliIndex::from_string("X")) == true);
    CHECK_THROWS_AS(quad_form(y1, PauliIndex::from_string("YY")), std::invalid_argument);
}

TEST_CASE("quad_form(b,b) equals y-count parity") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const PauliIndex b = random_pauli(rng, 1 + rng() % 70);
        CHECK(quad_form(b, b) == (y_count(b) % 2 == 1));
    }
}

TEST_CASE("mul worked examples") {
    const SignedPauli y{PauliIndex::from_string("Y"), +1};
    const SignedPauli yy = mul(y, y);
    CHECK(yy.sign == -1);
    CHECK(yy.index == PauliIndex::from_string("I"));

    const SignedPauli b{PauliIndex::from_string("XZ"), +1};
    const SignedPauli id{PauliIndex(2), +1};
    CHECK(mul(b, id) == b);

    const SignedPauli z{PauliIndex::from_string("Z"), +1};
    const SignedPauli x{PauliIndex::from_string("X"), +1};
    CHECK(mul(z, x) == SignedPauli{PauliIndex::from_string("Y"), -1});
    CHECK(mul(x, z) == SignedPauli{PauliIndex::from_string("Y"), +1});
}

TEST_CASE("mul involution sign") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedPauli p{random_pauli(rng, 1 + rng() % 10), (rng() & 1) ? +1 : -1};
        const SignedPauli sq = mul(p, p);
        CHECK(sq.index.bits.is_zero());
        CHECK(sq.sign == (y_count(p.index) % 2 == 1 ? -1 : +1));
    }
}

TEST_CASE("to_matrix worked examples") {
    CHECK(to_matrix(SignedPauli{PauliIndex(1), +1}) == std::vector<std::int8_t>{1, 0, 0, 1});
    CHECK(to_matrix(SignedPauli{PauliIndex::from_string("Y"), +1}) ==
          std::vector<std::int8_t>{0, -1, 1, 0});
    CHECK(to_matrix(SignedPauli{PauliIndex::from_string("X"), +1}) ==
          std::vector<std::int8_t>{0, 1, 1, 0});
    CHECK(to_matrix(SignedPauli{PauliIndex::from_string("Z"), +1}) ==
          std::vector<std::int8_t>{1, 0, 0, -1});
    CHECK_THROWS_AS(to_matrix(SignedPauli{PauliIndex(3), +1}, 2), std::invalid_argument);
}

TEST_CASE("to_matrix is a faithful representation of mul") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const SignedPauli p{random_pauli(rng, n), (rng() & 1) ? +1 : -1};
        const SignedPauli q{random_pauli(rng, n), (rng() & 1) ? +1 : -1};
        const std::size_t dim = std::size_t{1} << n;
        CHECK(to_matrix(mul(p, q)) == dense_mul(to_matrix(p), to_matrix(q), dim));
    }
}

TEST_CASE("expansion_sign worked examples") {
    // Two identical single-qubit Y columns: lwtr(H^T B H) = [[0,0],[1,0]].
    BitMatrix h(2, 2);
    h.set_col(0, BitVector::from_bits({1, 1}));
    h.set_col(1, BitVector::from_bits({1, 1}));
    CHECK(expansion_sign(h, BitVector::from_bits({0, 0})) == false);
    CHECK(expansion_sign(h, BitVector::from_bits({1, 0})) == false);
    CHECK(expansion_sign(h, BitVector::from_bits({0, 1})) == false);
    CHECK(expansion_sign(h, BitVector::from_bits({1, 1})) == true);
}

TEST_CASE("expansion_sign equals the sequential product sign") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t cols = 1 + rng() % 8;
        BitMatrix h(2 * n, cols);
        std::vector<PauliIndex> column(cols);
        for (std::size_t k = 0; k < cols; ++k) {
            column[k] = random_pauli(rng, n);
            h.set_col(k, column[k].bits);
        }
        for (std::uint64_t a_bits = 0; a_bits < (std::uint64_t{1} << cols); ++a_bits) {
            const BitVector a = qswe::testing::vector_from_counter(a_bits, cols);
            // Multiply selected sigma~ factors in circuit order: highest
            // index leftmost, accumulated by left multiplication.
            SignedPauli acc{PauliIndex(n), +1};
            for (std::size_t k = 0; k < cols; ++k) {
                if (a.get(k)) {
                    acc = mul(SignedPauli{column[k], +1}, acc);
                }
            }
            CHECK(expansion_sign(h, a) == (acc.sign < 0));
        }
    }
}
