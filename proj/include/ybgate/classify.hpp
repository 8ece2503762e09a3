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

#include <array>
#include <optional>
#include <string>

#include "ybgate/baxterize.hpp"
#include "ybgate/braid.hpp"
#include "ybgate/linalg.hpp"

namespace ybg {

// Image of one Pauli generator under U P U^dag, e.g. "XI" -> "-ZX".
struct PauliImage {
    std::string input;
    std::string output;  // sign prefix (+, -, +i, -i) then two Pauli letters
};

struct CliffordCheck {
    bool is_clifford = false;
    std::array<std::optional<PauliImage>, 4> table;  // XI, ZI, IX, IZ
};

CliffordCheck clifford_check(const Mat4d &u, double tol = 1e-8);
bool is_clifford(const Mat4d &u, double tol = 1e-8);

struct MatchgateCheck {
    bool is_matchgate = false;
    bool x_type = false;
    cd det_outer, det_inner;
};

MatchgateCheck matchgate_check(const Mat4d &u, double tol = 1e-8);
bool is_matchgate(const Mat4d &u, double tol = 1e-8);

// <m|<n| U~ |i>|j> = <j|<n| U |i>|m>
Mat4d reshuffle(const Mat4d &u);

struct DualUnitaryCheck {
    bool is_dual_unitary = false;
    double residual = 0.0;
};

DualUnitaryCheck is_dual_unitary(const Mat4d &u, double tol = 1e-8);

struct ConditionVerdicts {
    bool clifford = false;
    bool matchgate = false;
    bool dual_unitary = false;
};

// Table conditions evaluated on the parameters; lattice membership within lattice_tol.
ConditionVerdicts predict_conditions(const BraidSpec &spec, double lattice_tol = 1e-9);
ConditionVerdicts predict_conditions(const YbSpec &spec, double lattice_tol = 1e-9);

// True when v lies within tol of the lattice offset + k step.
bool on_lattice(double v, double step, double offset = 0.0, double tol = 1e-9);

struct ClassificationReport {
    CliffordCheck clifford;
    MatchgateCheck matchgate;
    DualUnitaryCheck dual;
    std::optional<ConditionVerdicts> predicted;
};

ClassificationReport classify(const Mat4d &u);

}  // namespace ybg
