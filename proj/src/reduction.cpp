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

#include "qswe/reduction.hpp"

#include <stdexcept>

#include "qswe/errors.hpp"

namespace qswe {

ExpansionData expand(const Circuit& c) {
    const std::size_t gate_count = c.gates.size();
    ExpansionData out;
    out.h = BitMatrix(2 * c.n, gate_count);
    out.lower = BitMatrix(gate_count, gate_count);
    out.diag = BitMatrix(gate_count, gate_count);
    for (std::size_t k = 0; k < gate_count; ++k) {
        const Gate& g = c.gates[k];
        if (g.index.n != c.n) {
            throw std::invalid_argument("expand: gate width disagrees with circuit");
        }
        if (!gate_is_real(g)) {
            throw std::invalid_argument(
                "expand: gate " + std::to_string(k + 1) +
                " is complex (even y-count); apply embed_real first");
        }
        out.h.set_col(k, g.index.bits);
        if (!gate_is_conforming(g)) {
            out.diag.set(k, k, true);
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (quad_form(g.index, c.gates[j].index)) {
                out.lower.set(k, j, true);
            }
        }
    }
    return out;
}

SplitRows split_rows(const BitMatrix& h) {
    if (h.rows() % 2 != 0) {
        throw std::invalid_argument("split_rows: H must have 2n rows");
    }
    const std::size_t n = h.rows() / 2;
    SplitRows out{BitMatrix(n, h.cols()), BitMatrix(n, h.cols())};
    for (std::size_t i = 0; i < n; ++i) {
        out.h0.set_row(i, h.row(2 * i));
        out.h1.set_row(i, h.row(2 * i + 1));
    }
    return out;
}

namespace {

BitMatrix sign_form(const ExpansionData& e) {
    BitMatrix b = e.lower;
    for (std::size_t k = 0; k < b.rows(); ++k) {
        if (e.diag.get(k, k)) {
            b.set(k, k, true);
        }
    }
    return b;
}

}  // namespace

QsweInstance amplitude_instance(const Circuit& c) {
    const ExpansionData e = expand(c);
    const SplitRows split = split_rows(e.h);
    return QsweInstance{split.h1, sign_form(e), c.l, c.k};
}

QsweInstance trace_instance(const Circuit& c) {
    const ExpansionData e = expand(c);
    const SplitRows split = split_rows(e.h);
    return QsweInstance{vstack(split.h0, split.h1), sign_form(e), c.l, c.k};
}

namespace {

// Multiplies (h0, h1) by (U^-T, U) for the row-reducing U of h1 and drops
// the rows where U h1 vanishes. The Gram matrix h0^T h1 and the kernel of
// h1 are untouched, but the row count shrinks to rank(h1) <= N, which is
// what the full-rank construction needs when the circuit has fewer gates
// than qubits.
SplitRows compress_rows(const BitMatrix& h0, const BitMatrix& h1) {
    const RowReduction rr = row_reduce(h1);
    const BitMatrix u_inv = row_reduce(rr.u).u;
    const BitMatrix h0_t = mat_mul(u_inv.transposed(), h0);
    SplitRows out{BitMatrix(rr.rank, h0.cols()), BitMatrix(rr.rank, h1.cols())};
    for (std::size_t i = 0; i < rr.rank; ++i) {
        out.h0.set_row(i, h0_t.row(i));
        out.h1.set_row(i, rr.r.row(i));
    }
    return out;
}

}  // namespace

QsweInstance canonicalize_p3(const Circuit& c) {
    const ExpansionData e = expand(c);
    if (!e.diag.is_zero()) {
        throw std::invalid_argument(
            "canonicalize_p3: nonconforming gate present; the P3 shape has no diagonal slot "
            "(use amplitude_instance for the general form)");
    }
    const SplitRows split = split_rows(e.h);
    BitMatrix a;
    if (rank(split.h0) == c.n) {
        a = mat_mul(split.h0.transposed(), split.h1);
    } else if (c.gates.size() >= c.n) {
        a = mat_mul(full_rank_replacement(split.h0, split.h1).transposed(), split.h1);
    } else {
        const SplitRows reduced = compress_rows(split.h0, split.h1);
        const BitMatrix h2 = rank(reduced.h0) == reduced.h0.rows()
                                 ? reduced.h0
                                 : full_rank_replacement(reduced.h0, reduced.h1);
        a = mat_mul(h2.transposed(), reduced.h1);
    }
    // The P3 form must keep the sign form, the diagonal, and the constraint
    // set of the amplitude sum; any slip here is a construction bug.
    const BitMatrix gram = mat_mul(split.h0.transposed(), split.h1);
    if (lwtr(a) != lwtr(gram)) {
        throw InternalError("canonicalize_p3: sign form changed");
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a.get(j, j)) {
            throw InternalError("canonicalize_p3: diag(H2^T H1) != I");
        }
    }
    const BitMatrix kernel = nullspace_basis(split.h1);
    if (nullspace_basis(a).cols() != kernel.cols()) {
        throw InternalError("canonicalize_p3: constraint set changed");
    }
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        if (!mat_vec(a, kernel.col(k)).is_zero()) {
            throw InternalError("canonicalize_p3: constraint set changed");
        }
    }
    return QsweInstance{a, lwtr(a), c.l, c.k};
}

Circuit p3_to_circuit(const BitMatrix& a, std::uint32_t k, std::uint32_t l) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("p3_to_circuit: A must be square");
    }
    const std::size_t gate_count = a.rows();
    for (std::size_t j = 0; j < gate_count; ++j) {
        if (!a.get(j, j)) {
            throw std::invalid_argument("p3_to_circuit: diag(A) must be I");
        }
    }
    Circuit c;
    c.n = gate_count;
    c.k = k;
    c.l = l;
    c.gates.reserve(gate_count);
    for (std::size_t j = 0; j < gate_count; ++j) {
        Gate g;
        g.index = PauliIndex(c.n);
        for (std::size_t i = 0; i < gate_count; ++i) {
            g.index.set_pair(i, i == j, a.get(i, j));
        }
        g.epsilon = conforming_epsilon(g.index);
        c.gates.push_back(std::move(g));
    }
    return c;
}

Circuit p4_to_circuit(const BitMatrix& cmat, std::uint32_t k, std::uint32_t l) {
    if (cmat.rows() != cmat.cols()) {
        throw std::invalid_argument("p4_to_circuit: C must be square");
    }
    const std::size_t gate_count = cmat.rows();
    for (std::size_t j = 0; j < gate_count; ++j) {
        if (!cmat.get(j, j)) {
            throw std::invalid_argument("p4_to_circuit: diag(C) must be I");
        }
    }
    const RankFactorization f = factor_rank(cmat);  // C = X Y^T
    Circuit c;
    c.n = f.x.cols();
    c.k = k;
    c.l = l;
    c.gates.reserve(gate_count);
    // H0 = X^T, H1 = Y^T: gate j has z part X[j][.] and x part Y[j][.].
    for (std::size_t j = 0; j < gate_count; ++j) {
        Gate g;
        g.index = PauliIndex(c.n);
        for (std::size_t i = 0; i < c.n; ++i) {
            g.index.set_pair(i, f.x.get(j, i), f.y.get(j, i));
        }
        g.epsilon = conforming_epsilon(g.index);
        c.gates.push_back(std::move(g));
    }
    return c;
}

}  // namespace qswe
