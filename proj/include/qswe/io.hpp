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

#ifndef QSWE_IO_HPP
#define QSWE_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "qswe/circuit.hpp"
#include "qswe/enumerator.hpp"

namespace qswe {

// Text formats. Lines starting with '#' are comments and are skipped
// everywhere. Parse failures raise ParseError with 1-based line/column.
//
//   gf2-matrix v1          qswe-circuit v1        qswe v1
//   rows <m> cols <n>      qubits <n>             n <n> m <m>
//   <m rows of 0/1>        k <k> l <l>            x <x> y <y>
//                          gate <paulis> [+|-]    A
//                          ...                    <m rows of 0/1>
//                                                 B
//                                                 <n rows of 0/1>
//
// Omitting a gate's sign means: convention-conforming orientation for real
// gates, '-' for complex gates.

BitMatrix parse_matrix(std::istream& in);
std::string format_matrix(const BitMatrix& m);

Circuit parse_circuit(std::istream& in);
std::string format_circuit(const Circuit& c);

QsweInstance parse_instance(std::istream& in);
/// `comment`, when nonempty, is emitted as a '#' line after the version line.
std::string format_instance(const QsweInstance& inst, std::string_view comment = {});

}  // namespace qswe

#endif
