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

#include "qswe/exact_sim.hpp"

#include <bit>
#include <stdexcept>

#include "qswe/errors.hpp"

namespace qswe {

GaussianInt GaussianInt::times_i_pow(unsigned t) const {
    switch (t & 3u) {
        case 0:
            return *this;
        case 1:
            return GaussianInt(-im, re);
        case 2:
            return GaussianInt(-re, -im);
        default:
            return GaussianInt(im, -re);
    }
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

std::string GaussianInt::str() const {
    if (im == 0) {
        return re.get_str();
    }
    std::string s;
    if (re != 0) {
        s = re.get_str();
        if (im > 0) {
            s += '+';
        }
    }
    if (im == -1) {
        s += '-';
    } else if (im != 1) {
        s += im.get_str();
    }
    s += 'i';
    return s;
}

bool ScaledMatrix::is_real() const {
    for (const GaussianInt& e : entries) {
        if (e.im != 0) {
            return false;
        }
    }
    return true;
}

GaussianInt ScaledMatrix::trace() const {
    GaussianInt t;
    for (std::size_t r = 0; r < dim(); ++r) {
        t += at(r, r);
    }
    return t;
}

namespace {

// Basis-index masks of a Pauli index: qubit i maps to index bit n-1-i.
struct BasisMasks {
    std::uint64_t z = 0;
    std::uint64_t x = 0;
};

BasisMasks basis_masks(const PauliIndex& b) {
    BasisMasks m;
    for (std::size_t i = 0; i < b.n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (b.n - 1 - i);
        if (b.z(i)) {
            m.z |= bit;
        }
        if (b.x(i)) {
            m.x |= bit;
        }
    }
    return m;
}

}  // namespace

ScaledMatrix circuit_unitary(const Circuit& c, std::size_t dense_limit) {
    if (c.n > dense_limit) {
        throw std::invalid_argument("circuit_unitary: qubit count exceeds the dense limit of " +
                                    std::to_string(dense_limit));
    }
    if (c.k < 1 || c.l < 1) {
        throw std::invalid_argument("circuit_unitary: k and l must be positive");
    }
    ScaledMatrix u;
    u.n = c.n;
    u.scale = c.gates.size();
    const std::size_t dim = u.dim();
    u.entries.assign(dim * dim, GaussianInt());
    for (std::size_t r = 0; r < dim; ++r) {
        u.at(r, r) = GaussianInt(1);
    }

    const mpz_class k(c.k);
    std::vector<GaussianInt> next(dim * dim);
    for (const Gate& g : c.gates) {
        if (g.index.n != c.n) {
            throw std::invalid_argument("circuit_unitary: gate width disagrees with circuit");
        }
        // Factor = k*I + coef * sigma~_b with coef = epsilon * l * i^{y+1};
        // sigma~_b |v> = (-1)^{<z,v>} |v xor x>.
        const BasisMasks masks = basis_masks(g.index);
        const unsigned ipow =
            static_cast<unsigned>((y_count(g.index) + 1 + (g.epsilon < 0 ? 2 : 0)) & 3u);
        const GaussianInt coef = GaussianInt(static_cast<long>(c.l)).times_i_pow(ipow);
        for (std::size_t r = 0; r < dim; ++r) {
            const std::size_t src = r ^ masks.x;
            const bool neg = std::popcount(src & masks.z) & 1;
            const GaussianInt row_coef =
                neg ? GaussianInt(-coef.re, -coef.im) : coef;
            for (std::size_t j = 0; j < dim; ++j) {
                GaussianInt& out = next[r * dim + j];
                const GaussianInt& keep = u.at(r, j);
                out.re = k * keep.re;
                out.im = k * keep.im;
                out += row_coef * u.at(src, j);
            }
        }
        u.entries.swap(next);
    }
    return u;
}

ScaledAmplitude amplitude00(const Circuit& c, std::size_t dense_limit) {
    const ScaledMatrix u = circuit_unitary(c, dense_limit);
    return ScaledAmplitude{u.at(0, 0), u.scale, c.k, c.l};
}

ScaledTrace normalized_trace(const Circuit& c, std::size_t dense_limit) {
    const ScaledMatrix u = circuit_unitary(c, dense_limit);
    return ScaledTrace{u.trace(), u.scale, c.n, c.k, c.l};
}

namespace {

mpz_class angle_norm_pow(std::uint32_t k, std::uint32_t l, std::size_t n) {
    const mpz_class base = mpz_class(k) * k + mpz_class(l) * l;
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n);
    return out;
}

}  // namespace

int sign_with_promise(const ScaledAmplitude& a) {
    if (!a.value.is_real()) {
        throw std::domain_error("amplitude sign: value is not real");
    }
    if (4 * a.value.norm2() < angle_norm_pow(a.k, a.l, a.scale)) {
        throw PromiseViolation("amplitude promise |<0|U|0>| >= 1/2 violated",
                               mpq_class(a.value.re));
    }
    return a.value.re > 0 ? +1 : -1;
}

int sign_with_promise(const ScaledTrace& t) {
    if (!t.value.is_real()) {
        throw std::domain_error("trace sign: value is not real");
    }
    mpz_class bound = angle_norm_pow(t.k, t.l, t.scale);
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, t.n);
    if (4 * t.value.norm2() < four_n * bound) {
        throw PromiseViolation("trace promise |tr U / 2^n| >= 1/2 violated",
                               mpq_class(t.value.re));
    }
    return t.value.re > 0 ? +1 : -1;
}

mpq_class prob_first_qubit_one(const Circuit& c, RamModel model, std::size_t dense_limit) {
    if (c.n == 0) {
        throw std::invalid_argument("prob_first_qubit_one: circuit has no qubits");
    }
    const ScaledMatrix u = circuit_unitary(c, dense_limit);
    const std::size_t dim = u.dim();
    const std::size_t half = dim / 2;
    mpz_class num = 0;
    std::size_t col_count = 1;
    if (model == RamModel::kQram) {
        for (std::size_t r = half; r < dim; ++r) {
            num += u.at(r, 0).norm2();
        }
    } else {
        col_count = half;  // initial states |0>|r> over random r
        for (std::size_t col = 0; col < half; ++col) {
            for (std::size_t r = half; r < dim; ++r) {
                num += u.at(r, col).norm2();
            }
        }
    }
    mpq_class p(num, angle_norm_pow(c.k, c.l, u.scale) * col_count);
    p.canonicalize();
    return p;
}

int sign_bias_with_promise(const mpq_class& p) {
    const mpq_class bias = 2 * p - 1;
    if (abs(bias) < mpq_class(1, 2)) {
        throw PromiseViolation("bias promise |2p-1| >= 1/2 violated", bias);
    }
    return bias > 0 ? +1 : -1;
}

}  // namespace qswe
