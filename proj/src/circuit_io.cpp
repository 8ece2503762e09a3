// Copyright 2026 The ybgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ybgate/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ybg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_decimal(std::string_view s, double &out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

std::string upper(std::string_view s) {
    std::string u(s);
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    return u;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const std::size_t j = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > j) parts.push_back(s.substr(j, i - j));
    }
    return parts;
}

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "SDG";
        case GateKind::T:
            return "T";
        case GateKind::Tdg:
            return "TDG";
        case GateKind::Rz:
            return "RZ";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    double value;
    if (parse_decimal(s, value)) return value;
    const std::size_t at = s.find("pi");
    if (at == std::string_view::npos) throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
    std::string_view coef = trim(s.substr(0, at));
    std::string_view rest = trim(s.substr(at + 2));
    const bool star = !coef.empty() && coef.back() == '*';
    if (star) coef = trim(coef.substr(0, coef.size() - 1));
    double c = 1.0;
    if (star && (coef.empty() || coef == "-" || coef == "+")) {
        throw std::invalid_argument("invalid angle coefficient in '" + std::string(text) + "'");
    } else if (coef == "-") {
        c = -1.0;
    } else if (!coef.empty() && coef != "+" && !parse_decimal(coef, c)) {
        throw std::invalid_argument("invalid angle coefficient in '" + std::string(text) + "'");
    }
    double d = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/' || !parse_decimal(trim(rest.substr(1)), d) || d == 0.0) {
            throw std::invalid_argument("invalid angle denominator in '" + std::string(text) + "'");
        }
    }
    return c * kPi / d;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_circuit(std::ostream &out, const Circuit &c) {
    c.validate();
    out << "# qubits=2\n";
    if (c.global_phase != 0.0) out << "# global_phase=" << format_real(c.global_phase) << "\n";
    for (const GateOp &op : c.ops) {
        out << gate_name(op.kind) << ' ' << op.q0;
        if (op.kind == GateKind::CNOT) out << ' ' << op.q1;
        if (op.kind == GateKind::Rz) out << ' ' << format_real(op.angle);
        out << '\n';
    }
}

std::string circuit_to_string(const Circuit &c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

Circuit read_circuit(std::istream &in) {
    Circuit c;
    bool header = false;
    std::string raw;
    int lineno = 0;
    const auto fail = [&](const std::string &msg) -> CircuitParseError {
        return CircuitParseError("line " + std::to_string(lineno) + ": " + msg, lineno);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            if (!header) {
                if (body != "qubits=2") throw fail("expected header '# qubits=2'");
                header = true;
            } else if (body.rfind("global_phase=", 0) == 0) {
                try {
                    c.global_phase = parse_angle(body.substr(13));
                } catch (const std::invalid_argument &e) {
                    throw fail(e.what());
                }
            }
            continue;
        }
        if (!header) throw fail("expected header '# qubits=2'");
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        const auto parts = split_ws(line);
        const std::string name = upper(parts[0]);
        const auto qubit = [&](std::string_view s) {
            if (s == "0") return 0;
            if (s == "1") return 1;
            throw fail("qubit index must be 0 or 1, got '" + std::string(s) + "'");
        };
        const auto arity = [&](std::size_t n) {
            if (parts.size() != n) throw fail(name + " takes " + std::to_string(n - 1) + " operand(s)");
        };
        GateOp op;
        if (name == "H" || name == "S" || name == "SDG" || name == "T" || name == "TDG") {
            arity(2);
            const int q = qubit(parts[1]);
            op = name == "H"     ? GateOp::h(q)
                 : name == "S"   ? GateOp::s(q)
                 : name == "SDG" ? GateOp::sdg(q)
                 : name == "T"   ? GateOp::t(q)
                                 : GateOp::tdg(q);
        } else if (name == "RZ") {
            arity(3);
            try {
                op = GateOp::rz(qubit(parts[1]), parse_angle(parts[2]));
            } catch (const std::invalid_argument &e) {
                throw fail(e.what());
            }
        } else if (name == "CNOT") {
            arity(3);
            op = GateOp::cnot(qubit(parts[1]), qubit(parts[2]));
            if (op.q0 == op.q1) throw fail("CNOT control and target must differ");
        } else {
            throw fail("unknown gate '" + std::string(parts[0]) + "'");
        }
        c.ops.push_back(op);
    }
    if (!header) throw CircuitParseError("missing header '# qubits=2'", lineno);
    return c;
}

Circuit parse_circuit(const std::string &text) {
    std::istringstream is(text);
    return read_circuit(is);
}

}  // namespace ybg
