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

#ifndef QSWE_BITMAT_HPP
#define QSWE_BITMAT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qswe {

/// Bit-packed vector over GF(2). Padding bits beyond size() are kept zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_(num_words(len), 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_string(std::string_view s);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= mask;
        } else {
            w_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// Number of one bits.
    std::size_t weight() const;
    bool is_zero() const;
    std::size_t leading_bit() const;  // index of first one bit; size() if zero

    /// Parity of the AND with `other` (the GF(2) inner product).
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    std::string str() const;

    static std::size_t num_words(std::size_t bits) { return (bits + 63) >> 6; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense GF(2) matrix with bit-packed rows (row-major).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(BitVector::num_words(cols)), w_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (v) {
            w_[i * wpr_ + (j >> 6)] |= mask;
        } else {
            w_[i * wpr_ + (j >> 6)] &= ~mask;
        }
    }

    BitVector row(std::size_t i) const;
    BitVector col(std::size_t j) const;
    void set_row(std::size_t i, const BitVector& v);
    void set_col(std::size_t j, const BitVector& v);

    void row_xor(std::size_t dst, std::size_t src);  // row[dst] ^= row[src]
    void row_swap(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const BitMatrix&) const = default;

    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {w_.data() + i * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t i) { return {w_.data() + i * wpr_, wpr_}; }

    std::string str() const;  // one 0/1 row per line, debugging aid

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

/// result[i][j] = XOR_k a[i][k] & b[k][j]. Throws on inner-dimension mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// a * v for a column vector v of length a.cols().
BitVector mat_vec(const BitMatrix& a, const BitVector& v);

/// [top; bottom] with matching column counts.
BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

struct RowReduction {
    BitMatrix r;                          // reduced row-echelon form, r = u * a
    BitMatrix u;                          // invertible row-operation record
    std::size_t rank = 0;                 // nonzero rows of r
    std::vector<std::size_t> pivot_cols;  // ascending, one per pivot row
};

RowReduction row_reduce(const BitMatrix& a);
std::size_t rank(const BitMatrix& a);

/// Columns form a basis of {v : a v = 0}; a.cols() - rank(a) columns.
BitMatrix nullspace_basis(const BitMatrix& a);

/// Lexicographically smallest v with a v = c, or nullopt if inconsistent.
/// Bit 0 is the most significant position of the lexicographic order.
std::optional<BitVector> solve_affine(const BitMatrix& a, const BitVector& c);

struct RankFactorization {
    BitMatrix x;  // m x rank, independent columns
    BitMatrix y;  // n x rank, independent columns; c = x * y^T
};

RankFactorization factor_rank(const BitMatrix& c);

/// Replaces the first n columns of h0 (both n x N, N >= n, diag(h0^T h1) = I)
/// by independent columns so that the result h2 has rank n while
/// lwtr(h2^T h1) = lwtr(h0^T h1) and diag(h2^T h1) = I. Each replacement
/// column is the lexicographically smallest admissible vector outside the
/// span of the columns already chosen. Postconditions are re-verified;
/// violation raises InternalError.
BitMatrix full_rank_replacement(const BitMatrix& h0, const BitMatrix& h1);

struct LwtrDiag {
    BitMatrix lower;  // strictly lower triangular part
    BitMatrix diag;   // diagonal part
};

/// Splits a square matrix; entries on or above the diagonal are discarded
/// from `lower`, off-diagonal entries from `diag`.
LwtrDiag lwtr_diag(const BitMatrix& a);

/// Strictly lower triangular part (the `lower` half of lwtr_diag).
BitMatrix lwtr(const BitMatrix& a);

}  // namespace qswe

#endif
