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

#include "ybgate/braid.hpp"

#include <cmath>
#include <stdexcept>

namespace ybg {

std::string to_string(Family f) {
    switch (f) {
        case Family::I:
            return "I";
        case Family::II:
            return "II";
        case Family::III:
            return "III";
        case Family::IV:
            return "IV";
    }
    return "?";
}

Family parse_family(const std::string &s) {
    if (s == "I") return Family::I;
    if (s == "II") return Family::II;
    if (s == "III") return Family::III;
    if (s == "IV") return Family::IV;
    throw std::invalid_argument("unknown family '" + s + "' (expected I, II, III or IV)");
}

int braid_param_count(Family f) {
    switch (f) {
        case Family::I:
            return 4;
        case Family::II:
            return 3;
        case Family::III:
            return 2;
        case Family::IV:
            return 1;
    }
    return 0;
}

void BraidSpec::validate() const {
    const int n = braid_param_count(family);
    if (static_cast<int>(phi.size()) != n) {
        throw std::invalid_argument("braid family " + to_string(family) + " takes " + std::to_string(n) +
                                    " phases, got " + std::to_string(phi.size()));
    }
    for (double p : phi) {
        if (!std::isfinite(p)) throw std::invalid_argument("braid phases must be finite");
    }
}

DerivedAngles derived_angles(const BraidSpec &spec) {
    spec.validate();
    const auto &p = spec.phi;
    DerivedAngles d;
    if (spec.family == Family::I) {
        d.p1 = 0.5 * (-p[0] - p[1] + p[2] + p[3]);
        d.p2 = 0.5 * (-p[0] + p[1] - p[2] + p[3]);
        d.p3 = 0.5 * (-p[0] + p[1] + p[2] - p[3]);
        d.omega = 0.5 * (p[1] - p[2]);
    } else if (spec.family == Family::II) {
        d.p1 = 0.5 * (-p[1] + p[2]);
        d.p2 = 0.5 * (-p[1] + 2 * p[0] - p[2]);
        d.omega = 0.5 * (p[1] - p[2]);
    }
    return d;
}

Mat4d build_braid(const BraidSpec &spec) {
    spec.validate();
    const auto &p = spec.phi;
    const auto e = [](double x) { return std::polar(1.0, x); };
    const cd i(0.0, 1.0);
    Mat4d b = Mat4d::Zero();
    switch (spec.family) {
        case Family::I:
            b(0, 0) = e(p[0]);
            b(1, 2) = e(p[1]);
            b(2, 1) = e(p[2]);
            b(3, 3) = e(p[3]);
            break;
        case Family::II:
            b(0, 3) = e(p[1]);
            b(1, 1) = e(p[0]);
            b(2, 2) = e(p[0]);
            b(3, 0) = e(p[2]);
            break;
        case Family::III: {
            const double c = std::cos(p[0]), s = std::sin(p[0]);
            b(0, 0) = c;
            b(0, 3) = s * e(p[1]);
            b(1, 1) = -i * s;
            b(1, 2) = -c;
            b(2, 1) = -c;
            b(2, 2) = -i * s;
            b(3, 0) = -s * e(-p[1]);
            b(3, 3) = c;
            break;
        }
        case Family::IV: {
            const double r = 1.0 / std::sqrt(2.0);
            b(0, 0) = r;
            b(0, 3) = r * e(p[0]);
            b(1, 1) = r;
            b(1, 2) = r;
            b(2, 1) = -r;
            b(2, 2) = r;
            b(3, 0) = -r * e(-p[0]);
            b(3, 3) = r;
            break;
        }
    }
    return b;
}

double braid_residual(const Mat4d &b) {
    const Mat2d id = Mat2d::Identity();
    const Mat8d x = kron(b, id);
    const Mat8d y = kron(id, b);
    return (x * y * x - y * x * y).norm();
}

NonlocalPoint braid_nonlocal_closed(const BraidSpec &spec) {
    const DerivedAngles d = derived_angles(spec);
    const double h = kPi / 2;
    switch (spec.family) {
        case Family::I:
            return canonicalize({h, h, h - d.p3});
        case Family::II:
            return canonicalize({h, h, h - d.p2});
        case Family::III:
            return canonicalize({h, h, h - 2 * spec.phi[0]});
        case Family::IV:
            return canonicalize({h, 0.0, 0.0});
    }
    return {};
}

double braid_ep_closed(const BraidSpec &spec) {
    const DerivedAngles d = derived_angles(spec);
    const auto sq = [](double x) { return x * x; };
    switch (spec.family) {
        case Family::I:
            return 2.0 / 9.0 * sq(std::sin(d.p3));
        case Family::II:
            return 2.0 / 9.0 * sq(std::sin(d.p2));
        case Family::III:
            return 2.0 / 9.0 * sq(std::sin(2 * spec.phi[0]));
        case Family::IV:
            return 2.0 / 9.0;
    }
    return 0.0;
}

}  // namespace ybg
