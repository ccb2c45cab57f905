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

#include <random>

#include "doctest.h"
#include "qswe/circuit.hpp"
#include "qswe/exact_sim.hpp"
#include "qswe/random_gen.hpp"

using namespace qswe;

namespace {

Circuit single_gate(const std::string& paulis, int epsilon, std::uint32_t k = 4,
                    std::uint32_t l = 3) {
    Circuit c;
    c.n = paulis.size();
    c.k = k;
    c.l = l;
    c.gates.push_back(Gate{PauliIndex::from_string(paulis), epsilon});
    return c;
}

}  // namespace

TEST_CASE("validate_real worked examples") {
    CHECK(validate_real(single_gate("Y", -1)).tag == RealityTag::kRealConforming);
    CHECK(validate_real(single_gate("X", -1)).tag == RealityTag::kComplex);
    // y-count 3 requires epsilon = +1.
    CHECK(validate_real(single_gate("YYY", -1)).tag == RealityTag::kRealNonconforming);
    CHECK(validate_real(single_gate("YYY", +1)).tag == RealityTag::kRealConforming);

    const auto report = validate_real(single_gate("X", -1));
    REQUIRE(report.gates.size() == 1);
    CHECK(!report.gates[0].real);
    CHECK(!report.gates[0].conforming);
}

TEST_CASE("conforming_epsilon follows the mod-4 rule") {
    CHECK(conforming_epsilon(PauliIndex::from_string("Y")) == -1);
    CHECK(conforming_epsilon(PauliIndex::from_string("YYY")) == +1);
    CHECK(conforming_epsilon(PauliIndex::from_string("YYYYY")) == -1);
    CHECK_THROWS_AS(conforming_epsilon(PauliIndex::from_string("X")), std::invalid_argument);
}

TEST_CASE("embed_real maps gates as the phase-tracking construction requires") {
    // Complex gate: sigma_y joins on qubit 0 and the orientation flips.
    const Circuit embedded = embed_real(single_gate("X", -1));
    CHECK(embedded.n == 2);
    REQUIRE(embedded.gates.size() == 1);
    CHECK(embedded.gates[0].index == PauliIndex::from_string("YX"));
    CHECK(embedded.gates[0].epsilon == +1);
    CHECK(validate_real(embedded).tag == RealityTag::kRealNonconforming);

    const Circuit embedded_plus = embed_real(single_gate("X", +1));
    CHECK(embedded_plus.gates[0].index == PauliIndex::from_string("YX"));
    CHECK(embedded_plus.gates[0].epsilon == -1);
    CHECK(validate_real(embedded_plus).tag == RealityTag::kRealConforming);

    // Real gate: passes through on shifted qubits.
    const Circuit passthrough = embed_real(single_gate("Y", -1));
    CHECK(passthrough.gates[0].index == PauliIndex::from_string("IY"));
    CHECK(passthrough.gates[0].epsilon == -1);

    // Empty circuit: qubit count still grows by one.
    Circuit empty;
    empty.n = 2;
    CHECK(embed_real(empty).n == 3);
    CHECK(embed_real(empty).gates.empty());
}

TEST_CASE("embedded complex gate has the hand-computed matrix") {
    // (4 - 3i sigma_x)/5 embeds to (4 + 3i sigma_y (x) sigma_x)/5; the
    // unnormalized 4x4 matrix is real with +-3 off the antidiagonal.
    const ScaledMatrix u = circuit_unitary(embed_real(single_gate("X", -1)));
    const long expected[4][4] = {{4, 0, 0, 3}, {0, 4, 3, 0}, {0, -3, 4, 0}, {-3, 0, 0, 4}};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(u.at(r, c) == GaussianInt(expected[r][c]));
        }
    }
}

TEST_CASE("r_map_check worked examples") {
    Circuit empty;
    empty.n = 1;
    CHECK(r_map_check(empty));
    CHECK(r_map_check(single_gate("X", -1)));
    CHECK(r_map_check(single_gate("Y", -1)));
    CHECK(r_map_check(single_gate("Z", +1)));
}

TEST_CASE("r_map_check holds for random mixed circuits") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t gates = rng() % 7;
        const std::uint32_t k = (trial % 2 == 0) ? 4 : 2;
        const std::uint32_t l = (trial % 2 == 0) ? 3 : 1;
        const Circuit c = random_mixed_circuit(rng, n, gates, k, l);
        CHECK(r_map_check(c));
        const Circuit embedded = embed_real(c);
        CHECK(embedded.gates.size() == c.gates.size());
        CHECK(embedded.n == c.n + 1);
        CHECK(validate_real(embedded).tag != RealityTag::kComplex);
    }
}
