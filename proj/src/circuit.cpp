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

#include "qswe/circuit.hpp"

#include <stdexcept>

#include "qswe/exact_sim.hpp"

namespace qswe {

bool gate_is_real(const Gate& g) {
    return y_count(g.index) % 2 == 1;
}

int conforming_epsilon(const PauliIndex& b) {
    const std::size_t y = y_count(b);
    if (y % 2 == 0) {
        throw std::invalid_argument("conforming_epsilon: index is not real (even y-count)");
    }
    return y % 4 == 1 ? -1 : +1;
}

bool gate_is_conforming(const Gate& g) {
    return gate_is_real(g) && g.epsilon == conforming_epsilon(g.index);
}

RealityReport validate_real(const Circuit& c) {
    RealityReport report;
    report.gates.reserve(c.gates.size());
    bool all_real = true;
    bool all_conforming = true;
    for (const Gate& g : c.gates) {
        GateReality r;
        r.real = gate_is_real(g);
        r.conforming = r.real && gate_is_conforming(g);
        all_real &= r.real;
        all_conforming &= r.conforming;
        report.gates.push_back(r);
    }
    report.tag = !all_real ? RealityTag::kComplex
                           : (all_conforming ? RealityTag::kRealConforming
                                             : RealityTag::kRealNonconforming);
    return report;
}

Circuit embed_real(const Circuit& c) {
    Circuit out;
    out.n = c.n + 1;
    out.k = c.k;
    out.l = c.l;
    out.gates.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        Gate e;
        e.index = PauliIndex(out.n);
        for (std::size_t q = 0; q < c.n; ++q) {
            e.index.set_pair(q + 1, g.index.z(q), g.index.x(q));
        }
        if (gate_is_real(g)) {
            e.epsilon = g.epsilon;  // identity on the phase qubit
        } else {
            // G' = Re(G) - i sigma_y^(0) Im(G) picks up a sigma_y factor on
            // the phase qubit and the opposite orientation.
            e.index.set_pair(0, true, true);
            e.epsilon = -g.epsilon;
        }
        out.gates.push_back(std::move(e));
    }
    return out;
}

bool r_map_check(const Circuit& c, std::size_t dense_limit) {
    if (c.n + 1 > dense_limit) {
        throw std::invalid_argument("r_map_check: qubit count exceeds the dense limit");
    }
    const ScaledMatrix orig = circuit_unitary(c, dense_limit);
    const ScaledMatrix embedded = circuit_unitary(embed_real(c), dense_limit);
    if (!embedded.is_real()) {
        return false;
    }
    const std::size_t dim = orig.dim();
    const GaussianInt i_unit(mpz_class(0), mpz_class(1));
    // R has one 1 and one i per row; both products stay O(4^n).
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t j = 0; j < 2 * dim; ++j) {
            // (R * U')[r][j] = U'[r][j] + i U'[dim + r][j]
            GaussianInt lhs = embedded.at(r, j);
            lhs += i_unit * embedded.at(dim + r, j);
            // (U * R)[r][j]: column j of R is e_{j mod dim} scaled by 1 or i.
            GaussianInt rhs = orig.at(r, j % dim);
            if (j >= dim) {
                rhs = rhs.times_i_pow(1);
            }
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qswe
