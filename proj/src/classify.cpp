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

#include "ybgate/classify.hpp"

#include <cmath>

namespace ybg {

namespace {

constexpr const char *kLetters = "IXYZ";

Mat4d pauli_string(int a, int b) { return kron(gates::pauli(a), gates::pauli(b)); }

std::string sign_label(cd c) {
    if (std::abs(c - cd(1, 0)) < 0.5) return "+";
    if (std::abs(c - cd(-1, 0)) < 0.5) return "-";
    if (std::abs(c - cd(0, 1)) < 0.5) return "+i";
    return "-i";
}

}  // namespace

CliffordCheck clifford_check(const Mat4d &u, double tol) {
    static constexpr std::array<std::array<int, 2>, 4> kGenerators = {{{1, 0}, {3, 0}, {0, 1}, {0, 3}}};
    static const std::array<cd, 4> kPhases = {cd(1, 0), cd(-1, 0), cd(0, 1), cd(0, -1)};
    CliffordCheck out;
    out.is_clifford = true;
    for (int g = 0; g < 4; ++g) {
        const auto [ga, gb] = kGenerators[g];
        const Mat4d c = u * pauli_string(ga, gb) * u.adjoint();
        for (int a = 0; a < 4 && !out.table[g]; ++a) {
            for (int b = 0; b < 4 && !out.table[g]; ++b) {
                const Mat4d p = pauli_string(a, b);
                const cd overlap = (p.adjoint() * c).trace() / 4.0;
                for (const cd &ph : kPhases) {
                    if ((c - ph * p).norm() <= tol) {
                        out.table[g] = PauliImage{std::string{kLetters[ga], kLetters[gb]},
                                                  sign_label(overlap) + std::string{kLetters[a], kLetters[b]}};
                        break;
                    }
                }
            }
        }
        if (!out.table[g]) out.is_clifford = false;
    }
    return out;
}

bool is_clifford(const Mat4d &u, double tol) { return clifford_check(u, tol).is_clifford; }

MatchgateCheck matchgate_check(const Mat4d &u, double tol) {
    MatchgateCheck out;
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_x = (i == j) || (i + j == 3);
            if (!on_x) off = std::max(off, std::abs(u(i, j)));
        }
    }
    out.x_type = off <= tol;
    out.det_outer = u(0, 0) * u(3, 3) - u(0, 3) * u(3, 0);
    out.det_inner = u(1, 1) * u(2, 2) - u(1, 2) * u(2, 1);
    out.is_matchgate = out.x_type && std::abs(out.det_outer - out.det_inner) <= tol;
    return out;
}

bool is_matchgate(const Mat4d &u, double tol) { return matchgate_check(u, tol).is_matchgate; }

Mat4d reshuffle(const Mat4d &u) {
    Mat4d r;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    r(2 * m + n, 2 * i + j) = u(2 * j + n, 2 * i + m);
                }
            }
        }
    }
    return r;
}

DualUnitaryCheck is_dual_unitary(const Mat4d &u, double tol) {
    const Mat4d r = reshuffle(u);
    const double residual = (r * r.adjoint() - Mat4d::Identity()).norm();
    return {residual <= tol, residual};
}

bool on_lattice(double v, double step, double offset, double tol) {
    const double x = (v - offset) / step;
    return std::abs(x - std::round(x)) * step <= tol;
}

ConditionVerdicts predict_conditions(const BraidSpec &spec, double lt) {
    const auto l = [lt](double v, double step, double off = 0.0) { return on_lattice(v, step, off, lt); };
    const double h = kPi / 2;
    const DerivedAngles d = derived_angles(spec);
    switch (spec.family) {
        case Family::I:
            return {l(d.p1, h) && l(d.p2, h) && l(d.p3, h), l(d.p3, kPi, h), true};
        case Family::II:
            return {l(d.p1, h) && l(d.p2, h), l(d.p2, kPi, h), true};
        case Family::III: {
            const double p1 = spec.phi[0], p2 = spec.phi[1];
            const bool cl = l(p1, kPi) || (l(p1, kPi, h) && l(p2, h)) || (l(p1, kPi / 4) && l(p2, kPi, h));
            return {cl, false, true};
        }
        case Family::IV:
            return {l(spec.phi[0], kPi), true, false};
    }
    return {};
}

ConditionVerdicts predict_conditions(const YbSpec &spec, double lt) {
    spec.validate();
    const auto l = [lt](double v, double step, double off = 0.0) { return on_lattice(v, step, off, lt); };
    const auto same_abs = [lt](double x, double y) { return std::abs(std::abs(x) - std::abs(y)) <= lt; };
    const double h = kPi / 2;
    const double mu = spec.spectral;
    const bool z = std::abs(mu) <= lt;
    switch (spec.family) {
        case Family::I:
        case Family::II: {
            const double phi = 0.5 * (spec.phi[1] + spec.phi[2]) - spec.phi[0];
            const double omega = 0.5 * (spec.phi[1] - spec.phi[2]);
            if (spec.kind == 1) {
                return {z || (l(phi, kPi) && l(omega, h)), z || l(phi, kPi, h), l(phi, kPi) && !z};
            }
            // tanh(mu/2) = +-tan(phi/2) for kind 2, +-cot(phi/2) for kind 3
            bool locus;
            if (spec.kind == 2) {
                locus = std::abs(std::cos(phi / 2)) > 1e-12 && same_abs(std::tanh(mu / 2), std::tan(phi / 2));
            } else {
                locus = std::abs(std::sin(phi / 2)) > 1e-12 && same_abs(std::tanh(mu / 2), 1.0 / std::tan(phi / 2));
            }
            return {l(omega, h) && (z || l(phi, kPi) || locus), locus, true};
        }
        case Family::III: {
            const double p1 = spec.phi[0], p2 = spec.phi[1];
            const bool swap_like = l(p1, kPi, h) && l(p2, h);
            if (spec.kind == 1) {
                return {z || l(p1, kPi) || swap_like, z, l(p1, h) && !z};
            }
            if (spec.kind == 2) {
                const bool locus = std::abs(std::cos(p1)) > 1e-12 && same_abs(std::tanh(mu), std::tan(p1));
                const bool cl = l(p1, kPi) || ((z || l(p1, kPi, h)) && l(p2, h)) || (locus && l(p2, kPi, h));
                return {cl, false, true};
            }
            const bool locus = std::abs(std::sin(p1)) > 1e-12 && same_abs(std::tanh(mu), 1.0 / std::tan(p1));
            return {z || l(p1, kPi) || swap_like || (locus && l(p2, kPi, h)), false, true};
        }
        case Family::IV: {
            const double chi = mu, p1 = spec.phi[0];
            const bool cl = l(chi, kPi) || (l(chi, kPi, h) && l(p1, h)) || (l(chi, kPi / 4) && l(p1, kPi));
            return {cl, true, false};
        }
    }
    return {};
}

ClassificationReport classify(const Mat4d &u) {
    return {clifford_check(u), matchgate_check(u), is_dual_unitary(u), std::nullopt};
}

}  // namespace ybg
