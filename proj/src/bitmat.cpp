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

#include "qswe/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "qswe/errors.hpp"

namespace qswe {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        v.set(i++, b != 0);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') {
            throw std::invalid_argument("bit string must contain only 0 and 1");
        }
        v.set(i, s[i] == '1');
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : w_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

bool BitVector::is_zero() const {
    for (std::uint64_t word : w_) {
        if (word != 0) {
            return false;
        }
    }
    return true;
}

std::size_t BitVector::leading_bit() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] != 0) {
            return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
        }
    }
    return len_;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector::dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        acc ^= w_[i] & other.w_[i];
    }
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector::operator^=: length mismatch");
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] ^= other.w_[i];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        }
        std::size_t j = 0;
        for (int b : row) {
            m.set(i, j++, b != 0);
        }
        ++i;
    }
    return m;
}

BitVector BitMatrix::row(std::size_t i) const {
    BitVector v(cols_);
    std::copy_n(w_.data() + i * wpr_, wpr_, v.words().data());
    return v;
}

BitVector BitMatrix::col(std::size_t j) const {
    BitVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v.set(i, get(i, j));
    }
    return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    }
    std::copy_n(v.words().data(), wpr_, w_.data() + i * wpr_);
}

void BitMatrix::set_col(std::size_t j, const BitVector& v) {
    if (v.size() != rows_) {
        throw std::invalid_argument("BitMatrix::set_col: length mismatch");
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        set(i, j, v.get(i));
    }
}

void BitMatrix::row_xor(std::size_t dst, std::size_t src) {
    std::uint64_t* d = w_.data() + dst * wpr_;
    const std::uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k) {
        d[k] ^= s[k];
    }
}

void BitMatrix::row_swap(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(w_.data() + a * wpr_, w_.data() + (a + 1) * wpr_, w_.data() + b * wpr_);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (get(i, j)) {
                t.set(j, i, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t word : w_) {
        if (word != 0) {
            return false;
        }
    }
    return true;
}

std::string BitMatrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += row(i).str();
        s += '\n';
    }
    return s;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: inner dimensions disagree");
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.row_words(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) {
                continue;
            }
            auto src = b.row_words(k);
            for (std::size_t w = 0; w < dst.size(); ++w) {
                dst[w] ^= src[w];
            }
        }
    }
    return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    BitVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        auto row = a.row_words(i);
        auto vw = v.words();
        for (std::size_t w = 0; w < row.size(); ++w) {
            acc ^= row[w] & vw[w];
        }
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("vstack: column counts disagree");
    }
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) {
        out.set_row(i, top.row(i));
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        out.set_row(top.rows() + i, bottom.row(i));
    }
    return out;
}

RowReduction row_reduce(const BitMatrix& a) {
    RowReduction res;
    res.r = a;
    res.u = BitMatrix::identity(a.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !res.r.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        res.r.row_swap(r, pivot);
        res.u.row_swap(r, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && res.r.get(i, c)) {
                res.r.row_xor(i, r);
                res.u.row_xor(i, r);
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const BitMatrix& a) {
    return row_reduce(a).rank;
}

BitMatrix nullspace_basis(const BitMatrix& a) {
    const RowReduction rr = row_reduce(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols) {
        is_pivot[c] = true;
    }
    BitMatrix basis(n, n - rr.rank);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        basis.set(f, k, true);
        for (std::size_t p = 0; p < rr.rank; ++p) {
            if (rr.r.get(p, f)) {
                basis.set(rr.pivot_cols[p], k, true);
            }
        }
        ++k;
    }
    return basis;
}

namespace {

// Row-reduced spanning set of a subspace of GF(2)^n. Reduction against it
// yields the lexicographically smallest coset representative.
class RrefSpan {
  public:
    // Reduces v modulo the span: zeroes v at every leading position.
    BitVector reduce(BitVector v) const {
        for (const BitVector& row : rows_) {
            if (v.get(row.leading_bit())) {
                v ^= row;
            }
        }
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    // Inserts v; returns false (no change) if v is already in the span.
    bool insert(const BitVector& v) {
        BitVector red = reduce(v);
        if (red.is_zero()) {
            return false;
        }
        const std::size_t lead = red.leading_bit();
        for (BitVector& row : rows_) {
            if (row.get(lead)) {
                row ^= red;
            }
        }
        rows_.push_back(std::move(red));
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }

  private:
    std::vector<BitVector> rows_;
};

// Lexicographically smallest element of {p + span(basis)} that lies outside
// the subspace `excluded`, or nullopt if the whole affine set is inside it.
std::optional<BitVector> lex_min_outside(BitVector p, std::vector<BitVector> basis,
                                         const RrefSpan& excluded) {
    auto any_outside = [&excluded](const BitVector& q, const std::vector<BitVector>& b) {
        if (!excluded.contains(q)) {
            return true;
        }
        for (const BitVector& v : b) {
            if (!excluded.contains(v)) {
                return true;
            }
        }
        return false;
    };
    if (!any_outside(p, basis)) {
        return std::nullopt;
    }
    for (std::size_t bit = 0; bit < p.size() && !basis.empty(); ++bit) {
        std::size_t w = basis.size();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].get(bit)) {
                w = i;
                break;
            }
        }
        if (w == basis.size()) {
            continue;  // bit is forced to p[bit]
        }
        BitVector pivot = std::move(basis[w]);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(w));
        for (BitVector& v : basis) {
            if (v.get(bit)) {
                v ^= pivot;
            }
        }
        if (p.get(bit)) {
            p ^= pivot;  // candidate with this bit zero
        }
        if (!any_outside(p, basis)) {
            p ^= pivot;  // forced to take the bit
        }
    }
    assert(!excluded.contains(p));
    return p;
}

}  // namespace

std::optional<BitVector> solve_affine(const BitMatrix& a, const BitVector& c) {
    if (a.rows() != c.size()) {
        throw std::invalid_argument("solve_affine: right-hand side length mismatch");
    }
    const std::size_t n = a.cols();
    BitMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a.get(i, j)) {
                aug.set(i, j, true);
            }
        }
        aug.set(i, n, c.get(i));
    }
    const RowReduction rr = row_reduce(aug);
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == n) {
        return std::nullopt;
    }
    BitVector p(n);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        p.set(rr.pivot_cols[r], rr.r.get(r, n));
    }
    // The free-variables-zero solution is reduced to the coset minimum.
    RrefSpan kernel;
    const BitMatrix basis = nullspace_basis(a);
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        kernel.insert(basis.col(k));
    }
    return kernel.reduce(std::move(p));
}

RankFactorization factor_rank(const BitMatrix& c) {
    const RowReduction rr = row_reduce(c);
    RankFactorization f;
    f.x = BitMatrix(c.rows(), rr.rank);
    f.y = BitMatrix(c.cols(), rr.rank);
    for (std::size_t t = 0; t < rr.rank; ++t) {
        f.x.set_col(t, c.col(rr.pivot_cols[t]));
        for (std::size_t j = 0; j < c.cols(); ++j) {
            f.y.set(j, t, rr.r.get(t, j));
        }
    }
    return f;
}

LwtrDiag lwtr_diag(const BitMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("lwtr_diag: matrix must be square");
    }
    LwtrDiag out{BitMatrix(a.rows(), a.cols()), BitMatrix(a.rows(), a.cols())};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (a.get(i, j)) {
                out.lower.set(i, j, true);
            }
        }
        if (a.get(i, i)) {
            out.diag.set(i, i, true);
        }
    }
    return out;
}

BitMatrix lwtr(const BitMatrix& a) {
    return lwtr_diag(a).lower;
}

BitMatrix full_rank_replacement(const BitMatrix& h0, const BitMatrix& h1) {
    const std::size_t n = h0.rows();
    const std::size_t cap = h0.cols();
    if (h1.rows() != n || h1.cols() != cap) {
        throw std::invalid_argument("full_rank_replacement: h0 and h1 must have equal shape");
    }
    if (cap < n) {
        throw std::invalid_argument("full_rank_replacement: need at least as many columns as rows");
    }
    const BitMatrix gram = mat_mul(h0.transposed(), h1);
    for (std::size_t j = 0; j < cap; ++j) {
        if (!gram.get(j, j)) {
            throw std::invalid_argument("full_rank_replacement: diag(h0^T h1) != I");
        }
    }

    auto verify = [&](const BitMatrix& h2) {
        const BitMatrix gram2 = mat_mul(h2.transposed(), h1);
        if (rank(h2) != n) {
            throw InternalError("full_rank_replacement: result not full rank");
        }
        if (lwtr(gram2) != lwtr(gram)) {
            throw InternalError("full_rank_replacement: lower-triangular part changed");
        }
        for (std::size_t j = 0; j < cap; ++j) {
            if (!gram2.get(j, j)) {
                throw InternalError("full_rank_replacement: diagonal not identity");
            }
        }
    };

    if (rank(h0) == n) {
        verify(h0);
        return h0;
    }

    std::vector<BitVector> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = h1.col(i);
    }
    RrefSpan chosen;
    std::vector<BitVector> replacement(n);
    for (std::size_t j = n; j-- > 0;) {
        const BitVector cj = h0.col(j);
        BitMatrix constraints(j + 1, n);
        BitVector rhs(j + 1);
        for (std::size_t i = 0; i <= j; ++i) {
            constraints.set_row(i, d[i]);
            rhs.set(i, d[i].dot(cj));
        }
        const auto particular = solve_affine(constraints, rhs);
        if (!particular) {
            throw InternalError("full_rank_replacement: constraint system inconsistent");
        }
        const BitMatrix kernel = nullspace_basis(constraints);
        std::vector<BitVector> basis(kernel.cols());
        for (std::size_t k = 0; k < kernel.cols(); ++k) {
            basis[k] = kernel.col(k);
        }
        const auto pick = lex_min_outside(*particular, std::move(basis), chosen);
        if (!pick) {
            throw InternalError("full_rank_replacement: no admissible independent column");
        }
        replacement[j] = *pick;
        chosen.insert(*pick);
    }

    BitMatrix h2 = h0;
    for (std::size_t j = 0; j < n; ++j) {
        h2.set_col(j, replacement[j]);
    }
    verify(h2);
    return h2;
}

}  // namespace qswe
