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

#include "qswe/io.hpp"

#include <istream>
#include <limits>
#include <sstream>
#include <vector>

#include "qswe/errors.hpp"

namespace qswe {

namespace {

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-comment line, with a trailing '\r' stripped.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++lineno_;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (!line.empty() && line.front() == '#') {
                continue;
            }
            return true;
        }
        ++lineno_;
        return false;
    }

    std::string require(const std::string& what) {
        std::string line;
        if (!next(line)) {
            fail(1, "unexpected end of input, expected " + what);
        }
        return line;
    }

    [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
        throw ParseError(lineno_, col, msg);
    }

    std::size_t lineno() const { return lineno_; }

  private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

std::uint64_t parse_count(LineReader& reader, const std::string& tok, const std::string& what,
                          std::uint64_t max_value) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        reader.fail(1, what + " must be a nonnegative integer, got '" + tok + "'");
    }
    unsigned long long v = 0;
    try {
        v = std::stoull(tok);
    } catch (const std::out_of_range&) {
        reader.fail(1, what + " out of range");
    }
    if (v > max_value) {
        reader.fail(1, what + " out of range");
    }
    return v;
}

// Parses a line of the shape "<key1> <num> <key2> <num>".
std::pair<std::uint64_t, std::uint64_t> parse_keyed_pair(LineReader& reader,
                                                         const std::string& line,
                                                         const std::string& key1,
                                                         const std::string& key2,
                                                         std::uint64_t max_value) {
    const auto tokens = split_tokens(line);
    if (tokens.size() != 4 || tokens[0] != key1 || tokens[2] != key2) {
        reader.fail(1, "expected '" + key1 + " <n> " + key2 + " <n>', got '" + line + "'");
    }
    return {parse_count(reader, tokens[1], key1, max_value),
            parse_count(reader, tokens[3], key2, max_value)};
}

void expect_header(LineReader& reader, const std::string& want) {
    const std::string line = reader.require("header '" + want + "'");
    if (line != want) {
        reader.fail(1, "expected header '" + want + "', got '" + line + "'");
    }
}

void read_rows(LineReader& reader, BitMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::string line = reader.require("a matrix row");
        if (line.size() != m.cols()) {
            reader.fail(line.size() + 1, "row has " + std::to_string(line.size()) +
                                             " entries, expected " + std::to_string(m.cols()));
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (line[j] != '0' && line[j] != '1') {
                reader.fail(j + 1, "matrix entries must be 0 or 1");
            }
            if (line[j] == '1') {
                m.set(i, j, true);
            }
        }
    }
}

constexpr std::size_t kMaxSide = 1u << 20;  // parser sanity bound on dimensions

}  // namespace

BitMatrix parse_matrix(std::istream& in) {
    LineReader reader(in);
    expect_header(reader, "gf2-matrix v1");
    const auto [rows, cols] =
        parse_keyed_pair(reader, reader.require("'rows <m> cols <n>'"), "rows", "cols", kMaxSide);
    BitMatrix m(rows, cols);
    read_rows(reader, m);
    return m;
}

std::string format_matrix(const BitMatrix& m) {
    std::string out = "gf2-matrix v1\n";
    out += "rows " + std::to_string(m.rows()) + " cols " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += m.row(i).str();
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::istream& in) {
    LineReader reader(in);
    expect_header(reader, "qswe-circuit v1");
    Circuit c;
    {
        const std::string line = reader.require("'qubits <n>'");
        const auto tokens = split_tokens(line);
        if (tokens.size() != 2 || tokens[0] != "qubits") {
            reader.fail(1, "expected 'qubits <n>', got '" + line + "'");
        }
        c.n = parse_count(reader, tokens[1], "qubits", kMaxSide);
    }
    {
        const auto [k, l] = parse_keyed_pair(reader, reader.require("'k <k> l <l>'"), "k", "l",
                                             std::numeric_limits<std::uint32_t>::max());
        if (k < 1 || l < 1) {
            reader.fail(1, "k and l must be positive");
        }
        c.k = static_cast<std::uint32_t>(k);
        c.l = static_cast<std::uint32_t>(l);
    }
    std::string line;
    while (reader.next(line)) {
        if (line.empty()) {
            reader.fail(1, "unexpected blank line");
        }
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] != "gate") {
            reader.fail(1, "expected 'gate <paulistring> [+|-]', got '" + line + "'");
        }
        std::string pauli;
        std::string sign;
        if (tokens.size() == 3) {
            pauli = tokens[1];
            sign = tokens[2];
        } else if (tokens.size() == 2) {
            if (tokens[1] == "+" || tokens[1] == "-") {
                sign = tokens[1];  // empty Pauli string on a 0-qubit circuit
            } else {
                pauli = tokens[1];
            }
        } else if (tokens.size() != 1) {
            reader.fail(1, "expected 'gate <paulistring> [+|-]'");
        }
        if (pauli.size() != c.n) {
            reader.fail(1, "gate acts on " + std::to_string(pauli.size()) +
                               " qubits, circuit has " + std::to_string(c.n));
        }
        Gate g;
        try {
            g.index = PauliIndex::from_string(pauli);
        } catch (const std::invalid_argument& e) {
            reader.fail(1, e.what());
        }
        if (sign.empty()) {
            g.epsilon = gate_is_real(g) ? conforming_epsilon(g.index) : -1;
        } else if (sign == "+") {
            g.epsilon = +1;
        } else if (sign == "-") {
            g.epsilon = -1;
        } else {
            reader.fail(1, "gate sign must be + or -, got '" + sign + "'");
        }
        c.gates.push_back(std::move(g));
    }
    return c;
}

std::string format_circuit(const Circuit& c) {
    std::string out = "qswe-circuit v1\n";
    out += "qubits " + std::to_string(c.n) + "\n";
    out += "k " + std::to_string(c.k) + " l " + std::to_string(c.l) + "\n";
    for (const Gate& g : c.gates) {
        out += "gate " + g.index.str() + (g.epsilon > 0 ? " +" : " -") + "\n";
    }
    return out;
}

QsweInstance parse_instance(std::istream& in) {
    LineReader reader(in);
    expect_header(reader, "qswe v1");
    const auto [n, m] =
        parse_keyed_pair(reader, reader.require("'n <n> m <m>'"), "n", "m", kMaxSide);
    const auto [x, y] = parse_keyed_pair(reader, reader.require("'x <x> y <y>'"), "x", "y",
                                         std::numeric_limits<std::uint32_t>::max());
    if (x < 1 || y < 1) {
        reader.fail(1, "x and y must be positive");
    }
    QsweInstance inst;
    inst.x = static_cast<std::uint32_t>(x);
    inst.y = static_cast<std::uint32_t>(y);
    std::string line = reader.require("'A'");
    if (line != "A") {
        reader.fail(1, "expected 'A', got '" + line + "'");
    }
    inst.a = BitMatrix(m, n);
    read_rows(reader, inst.a);
    line = reader.require("'B'");
    if (line != "B") {
        reader.fail(1, "expected 'B', got '" + line + "'");
    }
    inst.b = BitMatrix(n, n);
    read_rows(reader, inst.b);
    return inst;
}

std::string format_instance(const QsweInstance& inst, std::string_view comment) {
    std::string out = "qswe v1\n";
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    out += "n " + std::to_string(inst.a.cols()) + " m " + std::to_string(inst.a.rows()) + "\n";
    out += "x " + std::to_string(inst.x) + " y " + std::to_string(inst.y) + "\n";
    out += "A\n";
    for (std::size_t i = 0; i < inst.a.rows(); ++i) {
        out += inst.a.row(i).str();
        out += '\n';
    }
    out += "B\n";
    for (std::size_t i = 0; i < inst.b.rows(); ++i) {
        out += inst.b.row(i).str();
        out += '\n';
    }
    return out;
}

}  // namespace qswe
