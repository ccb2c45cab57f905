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

#ifndef QSWE_REDUCTION_HPP
#define QSWE_REDUCTION_HPP

#include "qswe/circuit.hpp"
#include "qswe/enumerator.hpp"

namespace qswe {

/// Path-sum expansion of a real circuit: with H the 2n x N matrix whose
/// column k is gate k's Pauli index, L = lwtr(H^T B H) for the symplectic
/// form B, and D the diagonal marking orientation-flipped (nonconforming)
/// gates, the circuit satisfies
///   (k^2+l^2)^{N/2} U = sum_a (-1)^{a^T (L+D) a} l^|a| k^{N-|a|} sigma~_{H a}.
struct ExpansionData {
    BitMatrix h;      // 2n x N
    BitMatrix lower;  // N x N, strictly lower triangular
    BitMatrix diag;   // N x N, diagonal
};

/// Even/odd row split of H: h0 holds the z parts, h1 the x parts (row 0 is
/// even). diag(h0^T h1) = I for real circuits.
struct SplitRows {
    BitMatrix h0;
    BitMatrix h1;
};

/// Requires every gate real (odd y-count); embed_real complex circuits first.
ExpansionData expand(const Circuit& c);

SplitRows split_rows(const BitMatrix& h);

/// QSWE instance with eval = (k^2+l^2)^{N/2} <0...0|U|0...0>:
/// A = H1, B = L + D, x = l, y = k.
QsweInstance amplitude_instance(const Circuit& c);

/// QSWE instance with eval = (k^2+l^2)^{N/2} tr U / 2^n:
/// A = [H0; H1], B = L + D, x = l, y = k.
QsweInstance trace_instance(const Circuit& c);

/// Problem-3 canonical form of the amplitude sum: A' = H2^T H1 with
/// H2 = H0 when H0 has full rank and the full-rank replacement otherwise,
/// B = lwtr(A'), diag(A') = I. eval is preserved exactly. Requires a
/// conforming circuit (D = 0).
QsweInstance canonicalize_p3(const Circuit& c);

/// Circuit whose amplitude sum is the Problem-3 instance (A, lwtr(A), l, k):
/// N qubits, N gates, gate j has z part e_j and x part = column j of A.
/// Requires A square with diag(A) = I.
Circuit p3_to_circuit(const BitMatrix& a, std::uint32_t k, std::uint32_t l);

/// Circuit whose trace sum is the Problem-4 instance ([C;C^T], lwtr(C), l, k):
/// factor C = X Y^T and use H0 = X^T, H1 = Y^T on rank(C) qubits.
/// Requires C square with diag(C) = I.
Circuit p4_to_circuit(const BitMatrix& c, std::uint32_t k, std::uint32_t l);

}  // namespace qswe

#endif
