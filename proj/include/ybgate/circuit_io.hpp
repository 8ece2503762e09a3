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

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ybgate/synth.hpp"

namespace ybg {

// Angle literals: decimals ("0.25", "-1e-3") or pi multiples ("pi", "-pi/4", "3*pi/4", "3pi/4", "0.5*pi").
double parse_angle(std::string_view text);

// 17 significant digits, enough to read back the same double.
std::string format_real(double x);

// Circuit text, one gate per line:
//
//   # qubits=2
//   # global_phase=<angle>      optional
//   H 0 | S q | SDG q | T q | TDG q | RZ q <angle> | CNOT c t
//
// Anything after '#' is a comment. Gate names are case-insensitive; the header is the first non-blank line.
void write_circuit(std::ostream &out, const Circuit &c);
std::string circuit_to_string(const Circuit &c);

class CircuitParseError : public std::runtime_error {
   public:
    CircuitParseError(const std::string &what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

   private:
    int line_;
};

Circuit read_circuit(std::istream &in);
Circuit parse_circuit(const std::string &text);

}  // namespace ybg
