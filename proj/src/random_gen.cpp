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

#include "qswe/random_gen.hpp"

#include <stdexcept>

namespace qswe {

namespace {

// Raw engine output (fully specified by the standard) keeps streams
// bit-reproducible across platforms; std::uniform_int_distribution is not.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

PauliIndex random_index(std::mt19937_64& rng, std::size_t qubits) {
    PauliIndex b(qubits);
    for (std::size_t q = 0; q < qubits; ++q) {
        const auto pattern = below(rng, 4);
        b.set_pair(q, pattern & 2, pattern & 1);
    }
    return b;
}

}  // namespace

Circuit random_conforming_circuit(std::mt19937_64& rng, std::size_t qubits, std::size_t gates,
                                  std::uint32_t k, std::uint32_t l) {
    if (qubits == 0 && gates > 0) {
        throw std::invalid_argument("random_conforming_circuit: real gates need qubits");
    }
    Circuit c;
    c.n = qubits;
    c.k = k;
    c.l = l;
    c.gates.reserve(gates);
    for (std::size_t g = 0; g < gates; ++g) {
        Gate gate;
        gate.index = random_index(rng, qubits);
        if (y_count(gate.index) % 2 == 0) {
            const std::size_t q = below(rng, qubits);
            if (gate.index.z(q) && gate.index.x(q)) {
                gate.index.set_pair(q, false, false);
            } else {
                gate.index.set_pair(q, true, true);
            }
        }
        gate.epsilon = conforming_epsilon(gate.index);
        c.gates.push_back(std::move(gate));
    }
    return c;
}

Circuit random_mixed_circuit(std::mt19937_64& rng, std::size_t qubits, std::size_t gates,
                             std::uint32_t k, std::uint32_t l) {
    Circuit c;
    c.n = qubits;
    c.k = k;
    c.l = l;
    c.gates.reserve(gates);
    for (std::size_t g = 0; g < gates; ++g) {
        Gate gate;
        do {
            gate.index = random_index(rng, qubits);
        } while (qubits > 0 && pauli_weight(gate.index) == 0);
        gate.epsilon = (rng() & 1) ? +1 : -1;
        c.gates.push_back(std::move(gate));
    }
    return c;
}

QsweInstance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m,
                             std::uint32_t max_xy) {
    QsweInstance inst;
    inst.a = BitMatrix(m, n);
    inst.b = BitMatrix(n, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inst.a.set(i, j, rng() & 1);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inst.b.set(i, j, rng() & 1);
        }
    }
    inst.x = static_cast<std::uint32_t>(1 + below(rng, max_xy));
    inst.y = static_cast<std::uint32_t>(1 + below(rng, max_xy));
    return inst;
}

}  // namespace qswe
