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

#include "qswe/enumerator.hpp"

#include <bit>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "qswe/errors.hpp"

namespace qswe {

void check_instance(const QsweInstance& inst) {
    if (inst.b.rows() != inst.a.cols() || inst.b.cols() != inst.a.cols()) {
        throw std::invalid_argument("instance: B must be n x n with n = A.cols");
    }
    if (inst.x < 1 || inst.y < 1) {
        throw std::invalid_argument("instance: x and y must be positive");
    }
}

namespace {

std::size_t worker_count() {
    const char* env = std::getenv("QSWE_THREADS");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
        throw std::invalid_argument("QSWE_THREADS must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

// Signed term counts bucketed by weight; the weight-w entry counts
// (+1 terms) - (-1 terms) among the visited b with |b| = w.
using WeightBuckets = std::vector<long>;

mpz_class buckets_to_value(const WeightBuckets& net, std::uint32_t x, std::uint32_t y) {
    const std::size_t n = net.size() - 1;
    mpz_class total = 0;
    mpz_class xp = 1;  // x^w
    for (std::size_t w = 0; w <= n; ++w) {
        if (net[w] != 0) {
            mpz_class yp;
            mpz_ui_pow_ui(yp.get_mpz_t(), y, n - w);
            total += net[w] * xp * yp;
        }
        xp *= x;
    }
    return total;
}

// One Gray-code walk over the kernel coordinates [0, low_dim) with the top
// coordinates fixed by `partition`. The quadratic form is updated
// incrementally: flipping kernel coordinate i changes b to b ^ v_i and the
// form by v_i^T B v_i + b^T (B + B^T) v_i.
void walk_partition(std::uint64_t partition, std::size_t low_dim,
                    const std::vector<BitVector>& basis, const std::vector<bool>& basis_form,
                    const std::vector<BitVector>& basis_cross, const BitMatrix& b_form,
                    WeightBuckets& net) {
    const std::size_t n = b_form.rows();
    BitVector b(n);
    for (std::size_t j = 0; low_dim + j < basis.size(); ++j) {
        if ((partition >> j) & 1) {
            b ^= basis[low_dim + j];
        }
    }
    bool q = b.dot(mat_vec(b_form, b));
    net[b.weight()] += q ? -1 : +1;

    // Fresh-recompute cross-check of the incremental form, debug builds only
    // and only where the walk is short enough to afford it.
    [[maybe_unused]] const bool check_form = basis.size() <= 16;
    const std::size_t words = b.words().size();
    std::uint64_t* bw = b.words().data();
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << low_dim); ++step) {
        const auto i = static_cast<std::size_t>(std::countr_zero(step));
        const std::uint64_t* vw = basis[i].words().data();
        const std::uint64_t* cw = basis_cross[i].words().data();
        std::uint64_t dot_acc = 0;
        std::size_t weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            dot_acc ^= bw[w] & cw[w];
            bw[w] ^= vw[w];
            weight += static_cast<std::size_t>(std::popcount(bw[w]));
        }
        q ^= basis_form[i] ^ (std::popcount(dot_acc) & 1);
        assert(!check_form || q == b.dot(mat_vec(b_form, b)));
        net[weight] += q ? -1 : +1;
    }
}

}  // namespace

mpz_class eval(const QsweInstance& inst, const EvalOptions& opts) {
    check_instance(inst);
    const std::size_t n = inst.a.cols();
    const BitMatrix kernel = nullspace_basis(inst.a);
    const std::size_t d = kernel.cols();
    if (d > opts.kernel_limit) {
        throw std::invalid_argument("eval: kernel dimension " + std::to_string(d) +
                                    " exceeds the limit of " + std::to_string(opts.kernel_limit));
    }

    std::vector<BitVector> basis(d);
    std::vector<bool> basis_form(d);
    std::vector<BitVector> basis_cross(d);
    const BitMatrix sym = [&] {
        BitMatrix s = inst.b.transposed();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (inst.b.get(i, j)) {
                    s.set(i, j, !s.get(i, j));
                }
            }
        }
        return s;
    }();
    for (std::size_t i = 0; i < d; ++i) {
        basis[i] = kernel.col(i);
        basis_form[i] = basis[i].dot(mat_vec(inst.b, basis[i]));
        basis_cross[i] = mat_vec(sym, basis[i]);
    }

    const std::size_t threads = worker_count();
    std::size_t split = 0;
    while (split < d && (std::size_t{1} << split) < threads) {
        ++split;
    }
    const std::size_t low_dim = d - split;
    const std::uint64_t partitions = std::uint64_t{1} << split;

    WeightBuckets net(n + 1, 0);
#pragma omp parallel num_threads(static_cast<int>(threads))
    {
        WeightBuckets local(n + 1, 0);
#pragma omp for schedule(static)
        for (long long p = 0; p < static_cast<long long>(partitions); ++p) {
            walk_partition(static_cast<std::uint64_t>(p), low_dim, basis, basis_form, basis_cross,
                           inst.b, local);
        }
#pragma omp critical
        {
            for (std::size_t w = 0; w <= n; ++w) {
                net[w] += local[w];
            }
        }
    }
    return buckets_to_value(net, inst.x, inst.y);
}

mpz_class eval_naive(const QsweInstance& inst) {
    check_instance(inst);
    const std::size_t n = inst.a.cols();
    if (n > 20) {
        throw std::invalid_argument("eval_naive: supports at most 20 columns");
    }
    const std::size_t m = inst.a.rows();
    std::vector<std::uint32_t> a_rows(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (inst.a.get(i, j)) {
                a_rows[i] |= std::uint32_t{1} << j;
            }
        }
    }
    std::vector<std::uint32_t> b_rows(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (inst.b.get(i, j)) {
                b_rows[i] |= std::uint32_t{1} << j;
            }
        }
    }
    WeightBuckets net(n + 1, 0);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const auto bits = static_cast<std::uint32_t>(b);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            ok = (std::popcount(a_rows[i] & bits) & 1) == 0;
        }
        if (!ok) {
            continue;
        }
        unsigned q = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((bits >> i) & 1) {
                q ^= std::popcount(b_rows[i] & bits) & 1;
            }
        }
        net[static_cast<std::size_t>(std::popcount(bits))] += q ? -1 : +1;
    }
    return buckets_to_value(net, inst.x, inst.y);
}

int sign_with_promise(const QsweInstance& inst, const EvalOptions& opts) {
    return sign_of_value_with_promise(eval(inst, opts), inst);
}

int sign_of_value_with_promise(const mpz_class& s, const QsweInstance& inst) {
    const mpz_class base = mpz_class(inst.x) * inst.x + mpz_class(inst.y) * inst.y;
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), inst.a.cols());
    if (4 * s * s < bound) {
        throw PromiseViolation("promise |S| >= (x^2+y^2)^{n/2}/2 violated for S = " + s.get_str(),
                               mpq_class(s));
    }
    return s > 0 ? +1 : -1;
}

ShapeTag classify_shape(const QsweInstance& inst) {
    check_instance(inst);
    const std::size_t n = inst.a.cols();
    const auto diag_is_identity = [](const BitMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!m.get(i, i)) {
                return false;
            }
        }
        return true;
    };
    if (inst.a.rows() == n && diag_is_identity(inst.a) && inst.b == lwtr(inst.a)) {
        return ShapeTag::kP3;
    }
    if (inst.a.rows() == 2 * n) {
        BitMatrix c(n, n);
        BitMatrix bottom(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            c.set_row(i, inst.a.row(i));
            bottom.set_row(i, inst.a.row(n + i));
        }
        if (bottom == c.transposed() && diag_is_identity(c) && inst.b == lwtr(c)) {
            return ShapeTag::kP4;
        }
    }
    return ShapeTag::kGeneral;
}

const char* shape_name(ShapeTag tag) {
    switch (tag) {
        case ShapeTag::kP3:
            return "P3";
        case ShapeTag::kP4:
            return "P4";
        default:
            return "GENERAL";
    }
}

}  // namespace qswe
