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

#ifndef QSWE_RANDOM_GEN_HPP
#define QSWE_RANDOM_GEN_HPP

#include <random>

#include "qswe/circuit.hpp"
#include "qswe/enumerator.hpp"

namespace qswe {

/// Per-gate recipe: draw a uniform pair pattern for every qubit, then force
/// odd y-parity by flipping one pair (toggling it into or out of Y), so no
/// rejection loop is needed. Gates come out convention-conforming.
Circuit random_conforming_circuit(std::mt19937_64& rng, std::size_t qubits, std::size_t gates,
                                  std::uint32_t k, std::uint32_t l);

/// Uniform pair patterns and orientations with no parity forcing; gates may
/// be complex or nonconforming. Identity gates are redrawn.
Circuit random_mixed_circuit(std::mt19937_64& rng, std::size_t qubits, std::size_t gates,
                             std::uint32_t k, std::uint32_t l);

/// Uniform A (m x n) and B (n x n), x and y uniform in [1, max_xy].
QsweInstance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m,
                             std::uint32_t max_xy);

}  // namespace qswe

#endif
