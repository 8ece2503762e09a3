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

#include "ybgate/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

namespace ybg {

namespace {

const cd kI(0.0, 1.0);

double wrap_angle(double x) {
    x = std::remainder(x, 2 * kPi);
    return x <= -kPi ? x + 2 * kPi : x;
}

// Magic-basis phases of core_gate(a).
std::array<double, 4> magic_phases(const std::array<double, 3> &a) {
    return {(a[0] - a[1] + a[2]) / 2, (a[0] + a[1] - a[2]) / 2, -(a[0] + a[1] + a[2]) / 2, (-a[0] + a[1] + a[2]) / 2};
}

std::array<double, 3> point_from_phases(double h1, double h2, double h4) { return {h1 + h2, h2 + h4, h1 + h4}; }

struct NoTrack {
    void shift(int, long long) {}
    void flip(int) {}
    void swap(int, int) {}
};

// Keeps original = e^{i phase} (l1 (x) l2) core(a) (r1 (x) r2) true across Weyl moves.
struct LocalTrack {
    Mat2d l1, l2, r1, r2;
    double phase;

    // a_k += n pi
    void shift(int k, long long n) {
        const Mat2d p = gates::pauli(k + 1);
        const long long m = ((n % 4) + 4) % 4;
        phase -= static_cast<double>(m) * kPi / 2;
        if (m % 2 == 1) {
            r1 = p * r1;
            r2 = p * r2;
        }
    }
    // negate the two coordinates other than l
    void flip(int l) {
        const Mat2d p = gates::pauli(l + 1);
        l1 = l1 * p;
        r1 = p * r1;
    }
    void swap(int j, int k) {
        Mat2d c;
        const int s = j + k;
        if (s == 1) {
            c = gates::phase_s();
        } else if (s == 3) {
            c = gates::rx(kPi / 2);
        } else {
            c = gates::hadamard();
        }
        l1 = l1 * c.adjoint();
        l2 = l2 * c.adjoint();
        r1 = c * r1;
        r2 = c * r2;
    }
};

template <typename Track>
void shift(std::array<double, 3> &a, Track &t, int k, long long n) {
    if (n == 0) return;
    a[k] += static_cast<double>(n) * kPi;
    t.shift(k, n);
}

template <typename Track>
void flip(std::array<double, 3> &a, Track &t, int j, int k) {
    a[j] = -a[j];
    a[k] = -a[k];
    t.flip(3 - j - k);
}

template <typename Track>
void swap(std::array<double, 3> &a, Track &t, int j, int k) {
    std::swap(a[j], a[k]);
    t.swap(j, k);
}

template <typename Track>
void canonicalize_tracked(std::array<double, 3> &a, Track &t, double tol) {
    for (int k = 0; k < 3; ++k) {
        shift(a, t, k, -std::llround(a[k] / kPi));
        if (a[k] < -kPi / 2 + tol) shift(a, t, k, 1);
    }
    if (std::abs(a[0]) < std::abs(a[1])) swap(a, t, 0, 1);
    if (std::abs(a[1]) < std::abs(a[2])) swap(a, t, 1, 2);
    if (std::abs(a[0]) < std::abs(a[1])) swap(a, t, 0, 1);
    if (a[0] < 0) flip(a, t, 0, 2);
    if (a[1] < 0) flip(a, t, 1, 2);
    if (std::abs(a[0] - kPi / 2) <= tol && a[2] < -tol) {
        shift(a, t, 0, -1);
        flip(a, t, 0, 2);
    }
    if (a[2] < -tol) {
        flip(a, t, 0, 2);
        shift(a, t, 0, 1);
    }
    for (double &x : a) x += 0.0;  // -0 -> +0
}

// Factor K ~ a (x) b with det b = 1.
std::pair<Mat2d, Mat2d> factor_tensor(const Mat4d &k) {
    int bi = 0, bj = 0;
    double bn = -1.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double n = k.block<2, 2>(2 * i, 2 * j).norm();
            if (n > bn) {
                bn = n;
                bi = i;
                bj = j;
            }
        }
    }
    Mat2d b = k.block<2, 2>(2 * bi, 2 * bj);
    b /= std::sqrt(b.determinant());
    Mat2d a;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            a(i, j) = (b.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
        }
    }
    return {a, b};
}

Mat2d to_special(const Mat2d &v, double &phase) {
    const cd s = std::sqrt(v.determinant());
    phase += std::arg(s);
    return v / s;
}

}  // namespace

Mat4d KakDecomposition::matrix() const {
    return std::polar(1.0, phase) * kron(v1, v2) * core_gate(a) * kron(v3, v4);
}

Mat4d magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4d q;
    q << s, 0, 0, kI * s,  //
        0, kI * s, s, 0,   //
        0, kI * s, -s, 0,  //
        s, 0, 0, -kI * s;
    return q;
}

Mat4d core_gate(const NonlocalPoint &a) {
    const auto h = magic_phases(a.array());
    Mat4d d = Mat4d::Zero();
    for (int k = 0; k < 4; ++k) d(k, k) = std::polar(1.0, h[k]);
    const Mat4d q = magic_basis();
    return q * d * q.adjoint();
}

namespace {

Mat4d special(const Mat4d &u, double &phase0) {
    phase0 = std::arg(u.determinant()) / 4;
    return u * std::polar(1.0, -phase0);
}

}  // namespace

LambdaSpectrum lambda_spectrum(const Mat4d &u) {
    if (unitarity_residual(u) > 1e-8) {
        throw std::invalid_argument("lambda_spectrum: input is not unitary");
    }
    double phase0 = 0.0;
    const Mat4d q = magic_basis();
    const Mat4d uq = q.adjoint() * special(u, phase0) * q;
    const Mat4d m = uq.transpose() * uq;
    const auto eig = sym_unitary_eig<double>(0.5 * (m + m.transpose()));
    LambdaSpectrum out;
    for (int k = 0; k < 4; ++k) out.values[k] = std::polar(1.0, eig.angles[k]);
    return out;
}

double spectrum_distance(const LambdaSpectrum &x, const LambdaSpectrum &y) {
    double best = std::numeric_limits<double>::infinity();
    for (double sign : {1.0, -1.0}) {
        std::array<int, 4> perm = {0, 1, 2, 3};
        do {
            double d = 0.0;
            for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(x.values[k] - sign * y.values[perm[k]]));
            best = std::min(best, d);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

NonlocalPoint canonicalize(const std::array<double, 3> &raw, double tol) {
    std::array<double, 3> a = raw;
    NoTrack t;
    canonicalize_tracked(a, t, tol);
    return {a[0], a[1], a[2]};
}

NonlocalPoint extract_nonlocal(const Mat4d &u) {
    const LambdaSpectrum spec = lambda_spectrum(u);
    std::array<double, 4> theta;
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
        theta[k] = std::arg(spec.values[k]);
        total += theta[k];
    }
    // Pick 2 pi shifts so the angles sum to zero exactly.
    const long long turns = std::llround(total / (2 * kPi));
    std::array<double, 4> chosen = theta;
    double chosen_span = std::numeric_limits<double>::infinity();
    for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != std::abs(turns)) continue;
        std::array<double, 4> th = theta;
        for (int k = 0; k < 4; ++k) {
            if (mask & (1 << k)) th[k] -= (turns > 0 ? 2 * kPi : -2 * kPi);
        }
        const double span = *std::max_element(th.begin(), th.end()) - *std::min_element(th.begin(), th.end());
        if (span < chosen_span) {
            chosen_span = span;
            chosen = th;
        }
    }
    const auto raw = point_from_phases(chosen[0] / 2, chosen[1] / 2, chosen[3] / 2);
    const NonlocalPoint a = canonicalize(raw);
    const double residual = spectrum_distance(lambda_spectrum(core_gate(a)), spec);
    if (residual > 1e-8) {
        throw NumericalError("extract_nonlocal: spectrum of the recovered core does not match", residual);
    }
    return a;
}

KakDecomposition kak_decompose(const Mat4d &u, double tol) {
    if (unitarity_residual(u) > 1e-8) {
        throw std::invalid_argument("kak_decompose: input is not unitary");
    }
    double phase0 = 0.0;
    const Mat4d q = magic_basis();
    const Mat4d up = q.adjoint() * special(u, phase0) * q;
    Mat4d m = up.transpose() * up;
    m = 0.5 * (m + m.transpose());
    const auto eig = sym_unitary_eig<double>(m);
    RMat4d o = eig.basis;
    if (o.determinant() < 0) o.col(0) *= -1.0;

    std::array<double, 4> h;
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        h[k] = eig.angles[k] / 2;
        sum += h[k];
    }
    if (std::llround(sum / kPi) % 2 != 0) h[0] += kPi;

    Mat4d dinv = Mat4d::Zero();
    for (int k = 0; k < 4; ++k) dinv(k, k) = std::polar(1.0, -h[k]);
    const Mat4d oc = o.cast<cd>();
    const Mat4d k1 = up * oc * dinv;
    const Mat4d left = q * k1 * q.adjoint();
    const Mat4d right = q * oc.transpose() * q.adjoint();
    const auto [a1, a2] = factor_tensor(left);
    const auto [a3, a4] = factor_tensor(right);

    std::array<double, 3> a = point_from_phases(h[0], h[1], h[3]);
    LocalTrack t{a1, a2, a3, a4, phase0};
    canonicalize_tracked(a, t, 1e-9);

    KakDecomposition out;
    out.a = {a[0], a[1], a[2]};
    out.phase = t.phase;
    out.v1 = to_special(t.l1, out.phase);
    out.v2 = to_special(t.l2, out.phase);
    out.v3 = to_special(t.r1, out.phase);
    out.v4 = to_special(t.r2, out.phase);
    // Align the bookkeeping phase with the input exactly.
    const cd overlap = (out.matrix().adjoint() * u).trace();
    out.phase = wrap_angle(out.phase + std::arg(overlap));
    const double residual = (u - out.matrix()).norm();
    if (residual > tol) {
        throw KakError("kak_decompose: reconstruction failed", residual, out);
    }
    return out;
}

KakDecomposition align_to(const KakDecomposition &k, const NonlocalPoint &target, double tol) {
    const auto close = [&](const std::array<double, 3> &a) {
        return std::abs(a[0] - target.a1) <= tol && std::abs(a[1] - target.a2) <= tol &&
               std::abs(a[2] - target.a3) <= tol;
    };
    std::array<double, 3> a = k.a.array();
    if (close(a)) return k;
    LocalTrack t{k.v1, k.v2, k.v3, k.v4, k.phase};
    flip(a, t, 0, 2);
    shift(a, t, 0, 1);
    if (!close(a)) return k;
    KakDecomposition out;
    out.a = {a[0], a[1], a[2]};
    out.phase = t.phase;
    out.v1 = to_special(t.l1, out.phase);
    out.v2 = to_special(t.l2, out.phase);
    out.v3 = to_special(t.r1, out.phase);
    out.v4 = to_special(t.r2, out.phase);
    out.phase = wrap_angle(out.phase);
    return out;
}

double chamber_distance(const NonlocalPoint &p, const NonlocalPoint &q, double tol) {
    const auto dist = [&](double x1, double x2, double x3) {
        return std::max({std::abs(x1 - q.a1), std::abs(x2 - q.a2), std::abs(x3 - q.a3)});
    };
    double d = dist(p.a1, p.a2, p.a3);
    if (std::abs(p.a3) <= tol || std::abs(q.a3) <= tol) d = std::min(d, dist(kPi - p.a1, p.a2, -p.a3));
    return d;
}

bool locally_equivalent(const Mat4d &u, const Mat4d &v, double tol) {
    return chamber_distance(extract_nonlocal(u), extract_nonlocal(v), tol) <= tol;
}

double entangling_power(const Mat4d &u) {
    const LambdaSpectrum s = lambda_spectrum(u);
    cd tr = 0.0;
    for (const cd &l : s.values) tr += l;
    return std::clamp(2.0 / 9.0 * (1.0 - std::norm(tr) / 16.0), 0.0, 2.0 / 9.0);
}

double entangling_power(const NonlocalPoint &a) {
    const double c1 = std::cos(a.a1), c2 = std::cos(a.a2), c3 = std::cos(a.a3);
    const double s1 = std::sin(a.a1), s2 = std::sin(a.a2), s3 = std::sin(a.a3);
    const double tr2 = 16.0 * (c1 * c1 * c2 * c2 * c3 * c3 + s1 * s1 * s2 * s2 * s3 * s3);
    return std::clamp(2.0 / 9.0 * (1.0 - tr2 / 16.0), 0.0, 2.0 / 9.0);
}

double entangling_power_mc(const Mat4d &u, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("entangling_power_mc: need at least one sample");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const auto qubit = [&] {
        Eigen::Vector2cd v(cd(g(rng), g(rng)), cd(g(rng), g(rng)));
        return Eigen::Vector2cd(v / v.norm());
    };
    double total = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        const Eigen::Vector2cd x = qubit();
        const Eigen::Vector2cd y = qubit();
        const Eigen::Vector4cd psi = u * kron(x, y);
        Mat2d c;
        c << psi(0), psi(1), psi(2), psi(3);
        const Mat2d rho = c * c.adjoint();
        total += 1.0 - (rho * rho).trace().real();
    }
    return total / static_cast<double>(n);
}

int min_cnot_count(const NonlocalPoint &a, double tol) {
    const bool base = std::abs(a.a2) <= tol && std::abs(a.a3) <= tol;
    if (base && (std::abs(a.a1) <= tol || std::abs(a.a1 - kPi) <= tol)) return 0;
    if (base && std::abs(a.a1 - kPi / 2) <= tol) return 1;
    if (std::abs(a.a3) <= tol) return 2;
    return 3;
}

ChamberLocation chamber_location(const NonlocalPoint &a, double tol) {
    const auto eq = [tol](double x, double y) { return std::abs(x - y) <= tol; };
    const double h = kPi / 2;
    const bool base = eq(a.a3, 0.0);
    if (base && eq(a.a2, 0.0) && eq(a.a1, 0.0)) return {"vertex", "O"};
    if (base && eq(a.a2, 0.0) && eq(a.a1, kPi)) return {"vertex", "A1"};
    if (base && eq(a.a1, h) && eq(a.a2, h)) return {"vertex", "A2"};
    if (eq(a.a1, h) && eq(a.a2, h) && eq(a.a3, h)) return {"vertex", "A3"};
    if (base && eq(a.a2, 0.0) && eq(a.a1, h)) return {"point", "mid OA1"};
    if (base && eq(a.a2, 0.0)) return {"edge", "OA1"};
    if (base && eq(a.a1, a.a2)) return {"edge", "OA2"};
    if (base && eq(a.a1 + a.a2, kPi)) return {"edge", "A1A2"};
    if (eq(a.a1, a.a2) && eq(a.a2, a.a3)) return {"edge", "OA3"};
    if (eq(a.a1 + a.a2, kPi) && eq(a.a2, a.a3)) return {"edge", "A1A3"};
    if (eq(a.a1, h) && eq(a.a2, h)) return {"edge", "A2A3"};
    if (base) return {"face", "OA1A2"};
    if (eq(a.a2, a.a3)) return {"face", "OA1A3"};
    if (eq(a.a1, a.a2)) return {"face", "OA2A3"};
    if (eq(a.a1 + a.a2, kPi)) return {"face", "A1A2A3"};
    return {"interior", "interior"};
}

}  // namespace ybg
