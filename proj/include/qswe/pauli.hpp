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

#ifndef QSWE_PAULI_HPP
#define QSWE_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qswe/bitmat.hpp"

namespace qswe {

/// Largest qubit count for which dense 2^n x 2^n matrices are materialized.
inline constexpr std::size_t kDefaultDenseLimit = 12;

/// A Pauli product in the symplectic 0-1 encoding: bit 2i is the z part and
/// bit 2i+1 the x part of qubit i, so per qubit 00 = I, 01 = X, 11 = Y,
/// 10 = Z.
struct PauliIndex {
    std::size_t n = 0;
    BitVector bits;  // length 2n

    PauliIndex() = default;
    explicit PauliIndex(std::size_t qubits) : n(qubits), bits(2 * qubits) {}

    /// Parses "IXYZ..." with the leftmost character acting on qubit 0.
    static PauliIndex from_string(std::string_view s);

    bool z(std::size_t qubit) const { return bits.get(2 * qubit); }
    bool x(std::size_t qubit) const { return bits.get(2 * qubit + 1); }
    void set_pair(std::size_t qubit, bool zbit, bool xbit) {
        bits.set(2 * qubit, zbit);
        bits.set(2 * qubit + 1, xbit);
    }

    std::string str() const;

    bool operator==(const PauliIndex&) const = default;
};

/// Number of 11 pairs (sigma_y tensor factors).
std::size_t y_count(const PauliIndex& b);

/// Number of non-identity tensor factors.
std::size_t pauli_weight(const PauliIndex& b);

/// b1^T B b2 over GF(2) for the block-diagonal symplectic form with blocks
/// [[0,1],[0,0]]: the parity of sum_i z1_i * x2_i.
bool quad_form(const PauliIndex& b1, const PauliIndex& b2);

/// sign * sigma~_index, where sigma~_b = (-i)^{|b|_y} sigma_b is the real
/// normalization. Always a signed permutation matrix over {0, +1, -1}.
struct SignedPauli {
    PauliIndex index;
    int sign = +1;

    bool operator==(const SignedPauli&) const = default;
};

/// sigma~_{b1} sigma~_{b2} = (-1)^{b1^T B b2} sigma~_{b1 xor b2}.
SignedPauli mul(const SignedPauli& p, const SignedPauli& q);

/// Dense 2^n x 2^n integer matrix (row-major, entries in {0, +1, -1}).
/// Qubit 0 is the most significant bit of the basis index.
std::vector<std::int8_t> to_matrix(const SignedPauli& p,
                                   std::size_t dense_limit = kDefaultDenseLimit);

/// a^T lwtr(H^T B H) a for a 2n x N column matrix H. Equals the sign
/// accumulated by multiplying the selected sigma~ columns in circuit order
/// (highest-index factor leftmost).
bool expansion_sign(const BitMatrix& h, const BitVector& a);

}  // namespace qswe

#endif
