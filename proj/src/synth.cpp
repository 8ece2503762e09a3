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

#include "ybgate/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "ybgate/baxterize.hpp"

namespace ybg {

namespace {

constexpr double kDropAngle = 1e-14;
constexpr double kGimbal = 1e-12;

double wrap(double x) {
    x = std::remainder(x, 2 * kPi);
    return x <= -kPi ? x + 2 * kPi : x;
}

// Set the bookkeeping phase so that evaluate(c) equals target exactly when c matches it up to phase.
void match_phase(Circuit &c, const Mat4d &target) {
    c.global_phase = 0.0;
    const cd overlap = (evaluate(c).adjoint() * target).trace();
    c.global_phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
}

void append_skeleton(Circuit &c, int n, const NonlocalPoint &a) {
    if (n == 1) {
        c.ops.push_back(GateOp::cnot(0, 1));
    } else if (n == 2) {
        // ~ core(a1, 0, a2)
        c.ops.push_back(GateOp::cnot(0, 1));
        c.ops.push_back(GateOp::h(0));
        append_rz(c, 0, -a.a1);
        c.ops.push_back(GateOp::h(0));
        append_rz(c, 1, -a.a2);
        c.ops.push_back(GateOp::cnot(0, 1));
    } else if (n == 3) {
        c.ops.push_back(GateOp::cnot(0, 1));
        c.ops.push_back(GateOp::h(0));
        c.ops.push_back(GateOp::s(0));
        append_rz(c, 0, -a.a2);
        append_rz(c, 1, -a.a1);
        c.ops.push_back(GateOp::cnot(0, 1));
        append_rz(c, 1, a.a3);
        c.ops.push_back(GateOp::h(1));
        c.ops.push_back(GateOp::cnot(1, 0));
        c.ops.push_back(GateOp::sdg(0));
        c.ops.push_back(GateOp::h(0));
        c.ops.push_back(GateOp::s(1));
        c.ops.push_back(GateOp::h(1));
    }
}

}  // namespace

void GateOp::validate() const {
    const auto valid = [](int q) { return q == 0 || q == 1; };
    if (!valid(q0)) throw std::invalid_argument("gate qubit index must be 0 or 1");
    if (kind == GateKind::CNOT) {
        if (!valid(q1)) throw std::invalid_argument("CNOT target must be 0 or 1");
        if (q0 == q1) throw std::invalid_argument("CNOT control and target must differ");
    }
    if (kind == GateKind::Rz && !std::isfinite(angle)) throw std::invalid_argument("Rz angle must be finite");
}

int Circuit::cnot_count() const {
    int n = 0;
    for (const auto &op : ops) n += op.kind == GateKind::CNOT ? 1 : 0;
    return n;
}

void Circuit::validate() const {
    for (const auto &op : ops) op.validate();
    if (!std::isfinite(global_phase)) throw std::invalid_argument("global phase must be finite");
}

Mat2d gate_matrix(const GateOp &op) {
    switch (op.kind) {
        case GateKind::H:
            return gates::hadamard();
        case GateKind::S:
            return gates::phase_s();
        case GateKind::Sdg:
            return gates::phase_s().adjoint();
        case GateKind::T:
            return gates::phase_t();
        case GateKind::Tdg:
            return gates::phase_t().adjoint();
        case GateKind::Rz:
            return gates::rz(op.angle);
        case GateKind::CNOT:
            break;
    }
    throw std::invalid_argument("gate_matrix: CNOT is a two-qubit gate");
}

Mat4d evaluate(const Circuit &c) {
    c.validate();
    Mat4d u = Mat4d::Identity();
    const Mat2d id = Mat2d::Identity();
    for (const auto &op : c.ops) {
        if (op.kind == GateKind::CNOT) {
            u = gates::cnot(op.q0) * u;
        } else if (op.q0 == 0) {
            u = kron(gate_matrix(op), id) * u;
        } else {
            u = kron(id, gate_matrix(op)) * u;
        }
    }
    return std::polar(1.0, c.global_phase) * u;
}

Mat2d EulerZXZ::matrix() const {
    const Mat2d h = gates::hadamard();
    return std::polar(1.0, phase) * gates::rz(alpha) * h * gates::rz(beta) * h * gates::rz(gamma);
}

EulerZXZ euler_zxz(const Mat2d &v) {
    const Mat2d w = v / std::sqrt(v.determinant());
    const cd a = w(0, 0), b = w(0, 1);
    EulerZXZ e;
    e.beta = 2 * std::atan2(std::abs(b), std::abs(a));
    if (e.beta < kGimbal) {
        e.beta = 0.0;
        e.alpha = -2 * std::arg(a);
    } else if (e.beta > kPi - kGimbal) {
        e.beta = kPi;
        e.alpha = -2 * std::arg(b) - kPi;
    } else {
        const double sum = -2 * std::arg(a);
        const double diff = -2 * std::arg(b) - kPi;
        e.alpha = 0.5 * (sum + diff);
        e.gamma = 0.5 * (sum - diff);
    }
    e.alpha = wrap(e.alpha);
    e.gamma = wrap(e.gamma);
    e.phase = 0.0;
    const cd overlap = (e.matrix().adjoint() * v).trace();
    e.phase = std::arg(overlap);
    return e;
}

void append_rz(Circuit &c, int q, double theta) {
    const double reduced = wrap(theta);
    const long long turns = std::llround((theta - reduced) / (2 * kPi));
    if (turns % 2 != 0) c.global_phase = wrap(c.global_phase + kPi);
    if (std::abs(reduced) <= kDropAngle) return;
    c.ops.push_back(GateOp::rz(q, reduced));
}

void append_single_qubit(Circuit &c, int q, const Mat2d &v) {
    const EulerZXZ e = euler_zxz(v);
    append_rz(c, q, e.gamma);
    if (e.beta != 0.0) {
        c.ops.push_back(GateOp::h(q));
        append_rz(c, q, e.beta);
        c.ops.push_back(GateOp::h(q));
    }
    append_rz(c, q, e.alpha);
    c.global_phase = wrap(c.global_phase + e.phase);
}

Circuit synth_zz(double theta) {
    Circuit c;
    c.ops.push_back(GateOp::cnot(0, 1));
    append_rz(c, 1, theta);
    c.ops.push_back(GateOp::cnot(0, 1));
    return c;
}

Circuit synth_general(const Mat4d &u) {
    const KakDecomposition k = kak_decompose(u);
    const int n = min_cnot_count(k.a);
    Circuit c;
    if (n == 0) {
        append_single_qubit(c, 0, k.v1 * k.v3);
        append_single_qubit(c, 1, k.v2 * k.v4);
    } else {
        Circuit skeleton;
        append_skeleton(skeleton, n, k.a);
        const KakDecomposition ks = align_to(kak_decompose(evaluate(skeleton)), k.a);
        // u = e^{i(phase - phase_s)} (v1 w1^dag (x) v2 w2^dag) S (w3^dag v3 (x) w4^dag v4)
        append_single_qubit(c, 0, ks.v3.adjoint() * k.v3);
        append_single_qubit(c, 1, ks.v4.adjoint() * k.v4);
        c.ops.insert(c.ops.end(), skeleton.ops.begin(), skeleton.ops.end());
        append_single_qubit(c, 0, k.v1 * ks.v1.adjoint());
        append_single_qubit(c, 1, k.v2 * ks.v2.adjoint());
    }
    match_phase(c, u);
    const double residual = verify_circuit(c, u);
    if (residual > 1e-7) {
        throw NumericalError("synth_general: circuit does not reproduce the target", residual);
    }
    return c;
}

Circuit synth_riv(double phi1, double chi) {
    Circuit c;
    append_rz(c, 0, phi1 / 2);
    append_rz(c, 1, phi1 / 2);
    c.ops.push_back(GateOp::s(0));
    c.ops.push_back(GateOp::h(1));
    c.ops.push_back(GateOp::h(0));
    c.ops.push_back(GateOp::cnot(0, 1));
    append_rz(c, 1, 2 * chi);
    c.ops.push_back(GateOp::cnot(0, 1));
    c.ops.push_back(GateOp::h(0));
    c.ops.push_back(GateOp::h(1));
    c.ops.push_back(GateOp::sdg(0));
    append_rz(c, 0, -phi1 / 2);
    append_rz(c, 1, -phi1 / 2);
    const Mat4d target = build_yb({Family::IV, 1, chi, {phi1}});
    match_phase(c, target);
    return c;
}

double verify_circuit(const Circuit &c, const Mat4d &target) { return phase_distance(evaluate(c), target); }

}  // namespace ybg
