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

#include "qswe/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qswe {

namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ull;  // z positions

}  // namespace

PauliIndex PauliIndex::from_string(std::string_view s) {
    PauliIndex p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'I':
                break;
            case 'X':
                p.set_pair(i, false, true);
                break;
            case 'Y':
                p.set_pair(i, true, true);
                break;
            case 'Z':
                p.set_pair(i, true, false);
                break;
            default:
                throw std::invalid_argument("Pauli string may contain only I, X, Y, Z");
        }
    }
    return p;
}

std::string PauliIndex::str() const {
    std::string s(n, 'I');
    for (std::size_t i = 0; i < n; ++i) {
        const int code = (z(i) ? 2 : 0) | (x(i) ? 1 : 0);
        s[i] = "IXYZ"[code == 3 ? 2 : (code == 2 ? 3 : code)];
    }
    return s;
}

std::size_t y_count(const PauliIndex& b) {
    std::size_t count = 0;
    for (std::uint64_t w : b.bits.words()) {
        count += static_cast<std::size_t>(std::popcount(w & (w >> 1) & kEvenBits));
    }
    return count;
}

std::size_t pauli_weight(const PauliIndex& b) {
    std::size_t count = 0;
    for (std::uint64_t w : b.bits.words()) {
        count += static_cast<std::size_t>(std::popcount((w | (w >> 1)) & kEvenBits));
    }
    return count;
}

bool quad_form(const PauliIndex& b1, const PauliIndex& b2) {
    if (b1.n != b2.n) {
        throw std::invalid_argument("quad_form: qubit counts disagree");
    }
    std::uint64_t acc = 0;
    auto w1 = b1.bits.words();
    auto w2 = b2.bits.words();
    for (std::size_t i = 0; i < w1.size(); ++i) {
        acc ^= w1[i] & (w2[i] >> 1) & kEvenBits;
    }
    return std::popcount(acc) & 1;
}

SignedPauli mul(const SignedPauli& p, const SignedPauli& q) {
    if (p.index.n != q.index.n) {
        throw std::invalid_argument("mul: qubit counts disagree");
    }
    SignedPauli out;
    out.index = p.index;
    out.index.bits ^= q.index.bits;
    out.sign = p.sign * q.sign * (quad_form(p.index, q.index) ? -1 : 1);
    return out;
}

std::vector<std::int8_t> to_matrix(const SignedPauli& p, std::size_t dense_limit) {
    const std::size_t n = p.index.n;
    if (n > dense_limit) {
        throw std::invalid_argument("to_matrix: qubit count exceeds the dense limit of " +
                                    std::to_string(dense_limit));
    }
    const std::size_t dim = std::size_t{1} << n;
    // Basis-index masks; qubit i maps to index bit n-1-i.
    std::uint64_t zmask = 0;
    std::uint64_t xmask = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p.index.z(i)) {
            zmask |= std::uint64_t{1} << (n - 1 - i);
        }
        if (p.index.x(i)) {
            xmask |= std::uint64_t{1} << (n - 1 - i);
        }
    }
    std::vector<std::int8_t> m(dim * dim, 0);
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t r = c ^ xmask;
        const bool neg = std::popcount(static_cast<std::uint64_t>(c) & zmask) & 1;
        m[r * dim + c] = static_cast<std::int8_t>(neg ? -p.sign : p.sign);
    }
    return m;
}

bool expansion_sign(const BitMatrix& h, const BitVector& a) {
    if (h.rows() % 2 != 0) {
        throw std::invalid_argument("expansion_sign: H must have 2n rows");
    }
    if (h.cols() != a.size()) {
        throw std::invalid_argument("expansion_sign: a must have one bit per column of H");
    }
    const std::size_t n = h.rows() / 2;
    PauliIndex acc(n);
    bool sign = false;
    for (std::size_t k = 0; k < h.cols(); ++k) {
        if (!a.get(k)) {
            continue;
        }
        PauliIndex bk(n);
        bk.bits = h.col(k);
        sign ^= quad_form(bk, acc);
        acc.bits ^= bk.bits;
    }
    return sign;
}

}  // namespace qswe
