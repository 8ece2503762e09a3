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

#include <vector>

#include "ybgate/linalg.hpp"
#include "ybgate/weyl.hpp"

namespace ybg {

enum class GateKind { H, S, Sdg, T, Tdg, Rz, CNOT };

struct GateOp {
    GateKind kind = GateKind::H;
    int q0 = 0;      // target of single-qubit gates, control of CNOT
    int q1 = -1;     // CNOT target
    double angle = 0.0;

    static GateOp h(int q) { return {GateKind::H, q}; }
    static GateOp s(int q) { return {GateKind::S, q}; }
    static GateOp sdg(int q) { return {GateKind::Sdg, q}; }
    static GateOp t(int q) { return {GateKind::T, q}; }
    static GateOp tdg(int q) { return {GateKind::Tdg, q}; }
    static GateOp rz(int q, double theta) { return {GateKind::Rz, q, -1, theta}; }
    static GateOp cnot(int control, int target) { return {GateKind::CNOT, control, target}; }

    void validate() const;
};

// Ops in application order; global_phase is bookkeeping so evaluate() can match a target exactly.
struct Circuit {
    std::vector<GateOp> ops;
    double global_phase = 0.0;

    int cnot_count() const;
    void validate() const;
};

Mat2d gate_matrix(const GateOp &op);
Mat4d evaluate(const Circuit &c);

// V = e^{i phase} Rz(alpha) H Rz(beta) H Rz(gamma)
struct EulerZXZ {
    double alpha = 0.0, beta = 0.0, gamma = 0.0, phase = 0.0;

    Mat2d matrix() const;
};

EulerZXZ euler_zxz(const Mat2d &v);

// Appends V on qubit q as Rz(gamma), H, Rz(beta), H, Rz(alpha), dropping identities;
// the Euler phase is added to c.global_phase.
void append_single_qubit(Circuit &c, int q, const Mat2d &v);

// Rz with the angle reduced to (-pi, pi]; Rz(t + 2 pi) = -Rz(t), so the sign goes into the phase.
void append_rz(Circuit &c, int q, double theta);

Circuit synth_zz(double theta);
Circuit synth_general(const Mat4d &u);
Circuit synth_riv(double phi1, double chi);

double verify_circuit(const Circuit &c, const Mat4d &target);

}  // namespace ybg
