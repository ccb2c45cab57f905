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

#ifndef QSWE_ERRORS_HPP
#define QSWE_ERRORS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qswe {

/// Process exit codes shared by the CLI and the test drivers.
enum class ExitStatus : int {
    kOk = 0,
    kUsage = 1,
    kPromiseViolated = 2,
    kInternalInvariant = 3,
};

/// A postcondition self-check failed. Signals a bug, never bad input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The promised lower bound on |S| (or |2p-1|) does not hold for this
/// instance. Carries the exactly computed quantity.
class PromiseViolation : public std::runtime_error {
  public:
    PromiseViolation(const std::string& what, mpq_class value)
        : std::runtime_error(what), value_(std::move(value)) {}

    const mpq_class& value() const { return value_; }

  private:
    mpq_class value_;
};

/// Malformed text input. Positions are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line_(line),
          col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

  private:
    std::size_t line_;
    std::size_t col_;
};

}  // namespace qswe

#endif
