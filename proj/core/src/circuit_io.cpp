// Copyright 2026 The wfemu Authors.
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

#include "wfemu/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace wfemu {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::string upper(std::string_view s) {
    std::string u(s);
    std::transform(u.begin(), u.end(), u.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return u;
}

std::optional<GateKind> gate_kind(std::string_view word) {
    static constexpr GateKind kAll[] = {GateKind::H,  GateKind::S,  GateKind::CX, GateKind::Rx,
                                        GateKind::Ry, GateKind::Rz, GateKind::T,  GateKind::X,
                                        GateKind::Y,  GateKind::Z};
    const std::string u = upper(word);
    for (GateKind k : kAll)
        if (gate_name(k) == u)
            return k;
    return std::nullopt;
}

int parse_int(std::string_view tok, int line, const char *what) {
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    return v;
}

double parse_angle(std::string_view tok, int line) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v))
        throw ParseError(line, "invalid angle '" + std::string(tok) + "'");
    return v;
}

int parse_qubit(std::string_view tok, int line, int n) {
    const int q = parse_int(tok, line, "qubit index");
    if (q < 0 || q >= n)
        throw ParseError(line, "qubit index " + std::to_string(q) + " out of range for " +
                                   std::to_string(n) + " qubits");
    return q;
}

} // namespace

ParseError::ParseError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty())
            continue;

        if (!have_header) {
            if (upper(words[0]) != "QUBITS" || words.size() != 2)
                throw ParseError(line_no, "expected header 'qubits N'");
            c.n = parse_int(words[1], line_no, "qubit count");
            if (c.n < 1 || c.n > 31)
                throw ParseError(line_no, "qubit count must be in [1, 31]");
            have_header = true;
            continue;
        }

        const auto kind = gate_kind(words[0]);
        if (!kind)
            throw ParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
        const std::size_t arity = (*kind == GateKind::CX || is_rotation(*kind)) ? 3 : 2;
        if (words.size() != arity)
            throw ParseError(line_no, std::string(gate_name(*kind)) + " expects " +
                                          std::to_string(arity - 1) + " operands");
        GateSpec g;
        g.kind = *kind;
        if (*kind == GateKind::CX) {
            g.control = parse_qubit(words[1], line_no, c.n);
            g.target = parse_qubit(words[2], line_no, c.n);
            if (g.control == g.target)
                throw ParseError(line_no, "control equals target");
        } else {
            g.target = parse_qubit(words[1], line_no, c.n);
            if (is_rotation(*kind))
                g.theta = parse_angle(words[2], line_no);
        }
        if (c.gates.size() >= kContextDepth)
            throw CapacityError("context memory overflow at line " + std::to_string(line_no) +
                                ": more than " + std::to_string(kContextDepth) + " gates");
        c.gates.push_back(g);
    }
    if (!have_header)
        throw ParseError(line_no, "missing header 'qubits N'");
    return c;
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open circuit file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

std::string print_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.n) + "\n";
    char buf[64];
    for (const GateSpec &g : c.gates) {
        out += gate_name(g.kind);
        if (g.kind == GateKind::CX) {
            std::snprintf(buf, sizeof buf, " %d %d\n", g.control, g.target);
        } else if (is_rotation(g.kind)) {
            std::snprintf(buf, sizeof buf, " %d %.17g\n", g.target, g.theta);
        } else {
            std::snprintf(buf, sizeof buf, " %d\n", g.target);
        }
        out += buf;
    }
    return out;
}

void write_circuit_file(const std::string &path, const Circuit &c) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write circuit file '" + path + "'");
    out << print_circuit(c);
}

} // namespace wfemu
