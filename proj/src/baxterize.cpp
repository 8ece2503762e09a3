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

#include "ybgate/baxterize.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace ybg {

namespace {

const cd kI(0.0, 1.0);
constexpr double kSingular = 1e-12;

void require_distinct(const std::vector<cd> &ls) {
    for (std::size_t j = 0; j < ls.size(); ++j) {
        for (std::size_t k = j + 1; k < ls.size(); ++k) {
            if (std::abs(ls[j] - ls[k]) < 1e-9) {
                throw std::invalid_argument("Yang-Baxterization needs distinct eigenvalues");
            }
        }
    }
}

struct SixVertex {
    double phi, omega;
};

SixVertex six_vertex(const YbSpec &s) {
    return {0.5 * (s.phi[1] + s.phi[2]) - s.phi[0], 0.5 * (s.phi[1] - s.phi[2])};
}

[[noreturn]] void singular(const YbSpec &s) {
    throw SingularParameterError("R_" + to_string(s.family) + "," + std::to_string(s.kind) +
                                 " is undefined at these parameters (mu = 0 on a singular lattice)");
}

Mat4d six_vertex_gate(const YbSpec &s) {
    const auto [phi, omega] = six_vertex(s);
    const double mu = s.spectral;
    Mat4d m = Mat4d::Zero();
    const bool second = s.family == Family::II;
    // Family II places the block on the outer corners, family I on the inner.
    const int p = second ? 0 : 1;
    const int q = second ? 3 : 2;
    const int r = second ? 1 : 0;
    const int t = second ? 2 : 3;
    if (s.kind == 1) {
        const cd d = std::sin(cd(phi, -mu));
        if (std::abs(d) < kSingular) singular(s);
        m(r, r) = m(t, t) = 1.0;
        m(p, p) = m(q, q) = std::sin(phi) / d;
        m(p, q) = -kI * std::polar(1.0, omega) * std::sinh(mu) / d;
        m(q, p) = -kI * std::polar(1.0, -omega) * std::sinh(mu) / d;
        return m;
    }
    cd diag, off;
    double delta;
    if (s.kind == 2) {
        diag = std::sinh(0.5 * cd(mu, phi));
        off = std::sinh(0.5 * cd(mu, -phi));
        delta = std::pow(std::sin(phi / 2), 2) + std::pow(std::sinh(mu / 2), 2);
    } else {
        diag = std::cosh(0.5 * cd(mu, phi));
        off = std::cosh(0.5 * cd(mu, -phi));
        delta = std::pow(std::cos(phi / 2), 2) + std::pow(std::sinh(mu / 2), 2);
    }
    if (std::sqrt(delta) < kSingular) singular(s);
    const double norm = 1.0 / std::sqrt(delta);
    m(r, r) = m(t, t) = diag * norm;
    m(p, q) = std::polar(1.0, omega) * off * norm;
    m(q, p) = std::polar(1.0, -omega) * off * norm;
    return m;
}

Mat4d eight_vertex_gate(const YbSpec &s) {
    const double mu = s.spectral, p1 = s.phi[0], p2 = s.phi[1];
    const double ch = std::cosh(mu), sh = std::sinh(mu), c = std::cos(p1), sn = std::sin(p1);
    const cd e = std::polar(1.0, p2);
    Mat4d m = Mat4d::Zero();
    if (s.kind == 1) {
        const cd dc = std::cosh(cd(mu, p1));
        const cd ds = std::sinh(cd(mu, p1));
        if (std::abs(dc) < kSingular || std::abs(ds) < kSingular) singular(s);
        m(0, 0) = m(3, 3) = ch * c / dc;
        m(0, 3) = -e * sh * sn / dc;
        m(3, 0) = std::conj(e) * sh * sn / dc;
        m(1, 1) = m(2, 2) = kI * ch * sn / ds;
        m(1, 2) = m(2, 1) = -sh * c / ds;
        return m;
    }
    // Kinds 2 and 3 share one template with cosh and sinh exchanged.
    const double u = s.kind == 2 ? sh : ch;
    const double v = s.kind == 2 ? ch : sh;
    const double delta = u * u * c * c + v * v * sn * sn;
    if (std::sqrt(delta) < kSingular) singular(s);
    const double n = 1.0 / std::sqrt(delta);
    m(0, 0) = m(3, 3) = u * c * n;
    m(0, 3) = -e * v * sn * n;
    m(3, 0) = std::conj(e) * v * sn * n;
    m(1, 1) = m(2, 2) = kI * v * sn * n;
    m(1, 2) = m(2, 1) = -u * c * n;
    return m;
}

Mat4d r_iv(double chi, double p1) {
    const double c = std::cos(chi), s = std::sin(chi);
    Mat4d m = Mat4d::Zero();
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = c;
    m(0, 3) = std::polar(1.0, p1) * s;
    m(3, 0) = -std::polar(1.0, -p1) * s;
    m(1, 2) = s;
    m(2, 1) = -s;
    return m;
}

}  // namespace

Mat4d SpectralDecomp::matrix() const {
    Mat4d m = Mat4d::Zero();
    for (std::size_t j = 0; j < lambdas.size(); ++j) m += lambdas[j] * projectors[j];
    return m;
}

SpectralDecomp spectral_decompose(const Mat4d &b, double group_tol) {
    if (unitarity_residual(b) > 1e-8) {
        throw std::invalid_argument("spectral_decompose: input is not unitary");
    }
    // Unitary input is normal: the Schur form is diagonal with an orthonormal basis.
    Eigen::ComplexSchur<Eigen::Matrix4cd> schur(b);
    const Eigen::Matrix4cd z = schur.matrixU();
    const Eigen::Matrix4cd t = schur.matrixT();
    SpectralDecomp out;
    std::vector<std::vector<int>> members;
    for (int k = 0; k < 4; ++k) {
        const cd l = t(k, k);
        std::size_t g = 0;
        for (; g < out.lambdas.size(); ++g) {
            if (std::abs(out.lambdas[g] - l) <= group_tol) break;
        }
        if (g == out.lambdas.size()) {
            out.lambdas.push_back(l);
            members.emplace_back();
        }
        members[g].push_back(k);
    }
    for (std::size_t g = 0; g < out.lambdas.size(); ++g) {
        cd mean = 0.0;
        Mat4d p = Mat4d::Zero();
        for (int k : members[g]) {
            mean += t(k, k);
            p += z.col(k) * z.col(k).adjoint();
        }
        out.lambdas[g] = mean / std::abs(mean);
        out.projectors.push_back(p);
    }
    const double residual = (out.matrix() - b).norm();
    if (residual > 1e-8) {
        throw NumericalError("spectral_decompose: reconstruction failed", residual);
    }
    return out;
}

Mat4d baxterize2(const Mat4d &b, cd l1, cd l2, cd x) {
    require_distinct({l1, l2});
    return (b + x * l1 * l2 * b.inverse()) / l2;
}

YbCoefficients yb_coefficients(cd x, cd l1, cd l2, cd l3) {
    return {-(x - 1.0) / l3, (1.0 + l1 / l2 + l1 / l3 + l2 / l3) * x, l1 * x * (x - 1.0)};
}

Baxterized baxterize3(const Mat4d &b, cd l1, cd l2, cd l3, cd x) {
    require_distinct({l1, l2, l3});
    const YbCoefficients c = yb_coefficients(x, l1, l2, l3);
    return {c.alpha * b + c.beta * Mat4d::Identity() + c.gamma * b.inverse(), c};
}

Mat4d baxterize_spectral(const SpectralDecomp &s, cd x) {
    const std::size_t n = s.lambdas.size();
    require_distinct(s.lambdas);
    Mat4d r = Mat4d::Zero();
    for (std::size_t j = 0; j < n; ++j) {
        cd theta = 1.0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const cd ratio = s.lambdas[k] / s.lambdas[k + 1];
            theta *= k < j ? 1.0 + x * ratio : x + ratio;
        }
        r += theta * s.projectors[j];
    }
    return r;
}

Mat4d normalize_unitary(const Mat4d &r) { return r / std::sqrt((r.adjoint() * r).trace().real() / 4.0); }

void YbSpec::validate() const {
    if (family == Family::IV) {
        if (kind != 1) throw std::invalid_argument("family IV has a single kind");
        if (phi.size() != 1) throw std::invalid_argument("family IV takes one phase");
    } else {
        if (kind < 1 || kind > 3) throw std::invalid_argument("kind must be 1, 2 or 3");
        const std::size_t n = family == Family::III ? 2 : 3;
        const bool four = family == Family::I && phi.size() == 4;
        if (phi.size() != n && !four) {
            throw std::invalid_argument("family " + to_string(family) + " Yang-Baxter gate takes " +
                                        std::to_string(n) + " phases");
        }
        if (four && std::abs(std::remainder(phi[3] - phi[0], 2 * kPi)) > 1e-12) {
            throw std::invalid_argument("family I Yang-Baxter gates need phi4 == phi1");
        }
    }
    if (!std::isfinite(spectral)) throw std::invalid_argument("spectral parameter must be finite");
    for (double p : phi) {
        if (!std::isfinite(p)) throw std::invalid_argument("phases must be finite");
    }
}

BraidSpec YbSpec::braid() const {
    validate();
    if (family == Family::I) return {Family::I, {phi[0], phi[1], phi[2], phi[0]}};
    return {family, phi};
}

YbSpec YbSpec::with_spectral(double s) const {
    YbSpec out = *this;
    out.spectral = s;
    return out;
}

std::vector<cd> braid_eigenvalues(const BraidSpec &spec) {
    spec.validate();
    const auto &p = spec.phi;
    switch (spec.family) {
        case Family::I: {
            const cd h = std::polar(1.0, 0.5 * (p[1] + p[2]));
            return {-h, std::polar(1.0, p[0]), h, std::polar(1.0, p[3])};
        }
        case Family::II: {
            const cd h = std::polar(1.0, 0.5 * (p[1] + p[2]));
            return {-h, std::polar(1.0, p[0]), h};
        }
        case Family::III:
            return {-std::polar(1.0, p[0]), std::polar(1.0, -p[0]), std::polar(1.0, p[0])};
        case Family::IV:
            return {std::polar(1.0, kPi / 4), std::polar(1.0, -kPi / 4)};
    }
    return {};
}

double yb_spectral_x(const YbSpec &spec) {
    switch (spec.family) {
        case Family::I:
        case Family::II:
            return std::exp(spec.spectral);
        case Family::III:
            return std::exp(2 * spec.spectral);
        case Family::IV:
            return std::tan(kPi / 4 - spec.spectral);
    }
    return 0.0;
}

Mat4d build_yb(const YbSpec &spec) {
    spec.validate();
    switch (spec.family) {
        case Family::I:
        case Family::II:
            return six_vertex_gate(spec);
        case Family::III:
            return eight_vertex_gate(spec);
        case Family::IV:
            return r_iv(spec.spectral, spec.phi[0]);
    }
    return Mat4d::Identity();
}

Mat4d yb_from_baxterization(const YbSpec &spec) {
    const BraidSpec bs = spec.braid();
    const Mat4d b = build_braid(bs);
    const double x = yb_spectral_x(spec);
    std::vector<cd> l = braid_eigenvalues(bs);
    if (spec.family == Family::IV) return normalize_unitary(baxterize2(b, l[0], l[1], x));
    if (spec.kind == 2) std::swap(l[0], l[1]);
    if (spec.kind == 3) std::swap(l[1], l[2]);
    return normalize_unitary(baxterize3(b, l[0], l[1], l[2], x).r);
}

double ybe_residual(const Mat4d &rx, const Mat4d &rxy, const Mat4d &ry) {
    const Mat2d id = Mat2d::Identity();
    const Mat8d lhs = kron(rx, id) * kron(id, rxy) * kron(ry, id);
    const Mat8d rhs = kron(id, ry) * kron(rxy, id) * kron(id, rx);
    const double nr = rhs.squaredNorm();
    if (nr == 0.0) return lhs.norm();
    const cd scale = (rhs.adjoint() * lhs).trace() / nr;
    return (lhs - scale * rhs).norm();
}

double ybe_residual(const std::function<Mat4d(double)> &r, double mu, double nu) {
    return ybe_residual(r(mu), r(mu + nu), r(nu));
}

double ybe_residual(const YbSpec &spec, double mu, double nu) {
    spec.validate();
    if (spec.family == Family::IV) {
        // Composition is multiplicative in x; chi(x) = pi/4 - arctan(x).
        const auto at = [&](double x) { return build_yb(spec.with_spectral(kPi / 4 - std::atan(x))); };
        const double x = std::exp(mu), y = std::exp(nu);
        return ybe_residual(at(x), at(x * y), at(y));
    }
    return ybe_residual([&](double m) { return build_yb(spec.with_spectral(m)); }, mu, nu);
}

NonlocalPoint yb_nonlocal_closed(const YbSpec &spec) {
    spec.validate();
    const double h = kPi / 2;
    const auto first_kind = [](double phi, double mu) -> NonlocalPoint {
        const double s2 = std::pow(std::sin(phi), 2);
        const double den = s2 + std::pow(std::sinh(mu), 2);
        if (std::sqrt(den) < kSingular) return {0.0, 0.0, 0.0};
        const double a = std::acos(std::clamp(std::sqrt(s2 / den), 0.0, 1.0));
        const cd c = 0.5 * kI * std::log(std::sin(cd(phi, mu)) / std::sin(cd(phi, -mu)));
        return canonicalize({a, a, c.real()});
    };
    const double mu = spec.spectral;
    switch (spec.family) {
        case Family::I:
        case Family::II: {
            const double phi = six_vertex(spec).phi;
            if (spec.kind == 1) return first_kind(phi, mu);
            cd ratio;
            if (spec.kind == 2) {
                const cd den = std::sin(0.5 * cd(phi, mu));
                if (std::abs(den) < kSingular) singular(spec);
                ratio = std::sin(0.5 * cd(phi, -mu)) / den;
            } else {
                const cd den = std::cos(0.5 * cd(phi, -mu));
                if (std::abs(den) < kSingular) singular(spec);
                ratio = std::cos(0.5 * cd(phi, mu)) / den;
            }
            const double v = (-kI * std::log(ratio)).real();
            return canonicalize({h, h, h - v});
        }
        case Family::III: {
            const double p1 = spec.phi[0];
            if (spec.kind == 1) return first_kind(2 * p1, 2 * mu);
            const double u = spec.kind == 2 ? std::sinh(mu) : std::cosh(mu);
            const double w = spec.kind == 2 ? std::cosh(mu) : std::sinh(mu);
            const double den = std::hypot(u * std::cos(p1), w * std::sin(p1));
            if (den < kSingular) singular(spec);
            const double v = std::acos(std::clamp(u * std::cos(p1) / den, -1.0, 1.0));
            return canonicalize({h, h, h - 2 * v});
        }
        case Family::IV:
            return canonicalize({2 * spec.spectral, 0.0, 0.0});
    }
    return {};
}

double yb_ep(const YbSpec &spec) {
    if (spec.family == Family::IV) {
        spec.validate();
        return 2.0 / 9.0 * std::pow(std::sin(2 * spec.spectral), 2);
    }
    return entangling_power(yb_nonlocal_closed(spec));
}

double braid_limit_residual(const YbSpec &spec, double mu) {
    if (spec.family == Family::IV || spec.kind != 1) {
        throw std::invalid_argument("braid limit is defined for families I-III, first kind");
    }
    return phase_distance(build_yb(spec.with_spectral(mu)), build_braid(spec.braid()));
}

}  // namespace ybg
