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

#ifndef QSWE_CIRCUIT_HPP
#define QSWE_CIRCUIT_HPP

#include <cstdint>
#include <vector>

#include "qswe/pauli.hpp"

namespace qswe {

/// One rotation gate with value (k + epsilon * i * l * sigma_b) / sqrt(k^2+l^2).
/// The gate is real iff y_count(index) is odd; it then equals
/// (k + l * sigma~_b) / sqrt(k^2+l^2) exactly when epsilon matches the
/// orientation convention (epsilon = -1 for y_count = 1 mod 4, +1 for 3 mod 4).
struct Gate {
    PauliIndex index;
    int epsilon = -1;

    bool operator==(const Gate&) const = default;
};

/// Gates apply in list order: U = G_N ... G_2 G_1 with gates[0] = G_1.
/// The rotation angle is shared: all gates use the circuit's (k, l).
struct Circuit {
    std::size_t n = 0;
    std::vector<Gate> gates;
    std::uint32_t k = 4;
    std::uint32_t l = 3;
};

bool gate_is_real(const Gate& g);

/// Convention-conforming orientation for a real (odd y-count) index.
int conforming_epsilon(const PauliIndex& b);

bool gate_is_conforming(const Gate& g);

enum class RealityTag {
    kRealConforming,
    kRealNonconforming,
    kComplex,
};

struct GateReality {
    bool real = false;
    bool conforming = false;
};

struct RealityReport {
    std::vector<GateReality> gates;
    RealityTag tag = RealityTag::kRealConforming;
};

/// Per-gate reality/orientation report. The circuit is COMPLEX if any gate
/// has even y-count, otherwise REAL and CONFORMING iff every gate is.
RealityReport validate_real(const Circuit& c);

/// Phase-tracking embedding onto n+1 qubits (new qubit 0).
/// Complex gates gain a sigma_y factor on qubit 0 with flipped orientation;
/// real gates pass through with an identity factor on qubit 0. Every output
/// gate is real.
Circuit embed_real(const Circuit& c);

/// Verifies R * U(embed_real(c)) = U(c) * R at the unnormalized integer
/// level, and that U(embed_real(c)) is purely real, where
/// R (alpha|0> + beta|1>)|b> = (alpha + i beta)|b> collapses the phase qubit.
bool r_map_check(const Circuit& c, std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace qswe

#endif
