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
#include <cstdint>
#include <string>

#include "ybgate/linalg.hpp"

namespace ybg {

// Chamber coordinates; canonical points satisfy pi - a2 >= a1 >= a2 >= a3 >= 0
// with a1 <= pi/2 on the base a3 = 0.
struct NonlocalPoint {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    std::array<double, 3> array() const { return {a1, a2, a3}; }
};

inline constexpr double kChamberTol = 1e-7;

struct KakDecomposition {
    Mat2d v1, v2, v3, v4;
    NonlocalPoint a;
    double phase = 0.0;

    Mat4d matrix() const;
};

class KakError : public NumericalError {
   public:
    KakError(const std::string &what, double residual, KakDecomposition best)
        : NumericalError(what, residual), best_(std::move(best)) {}
    const KakDecomposition &best_attempt() const { return best_; }

   private:
    KakDecomposition best_;
};

struct LambdaSpectrum {
    std::array<cd, 4> values;
};

Mat4d magic_basis();

// exp(i/2 (a1 XX + a2 YY + a3 ZZ)); any real a is accepted.
Mat4d core_gate(const NonlocalPoint &a);

LambdaSpectrum lambda_spectrum(const Mat4d &u);

// Multiset distance between spectra, minimised over the overall sign flip.
double spectrum_distance(const LambdaSpectrum &x, const LambdaSpectrum &y);

NonlocalPoint canonicalize(const std::array<double, 3> &raw, double tol = 1e-9);

NonlocalPoint extract_nonlocal(const Mat4d &u);

KakDecomposition kak_decompose(const Mat4d &u, double tol = 1e-8);

// Rewrite a decomposition onto the base-mirrored representative when that is
// the one matching target; returns k unchanged otherwise.
KakDecomposition align_to(const KakDecomposition &k, const NonlocalPoint &target, double tol = 1e-6);

// Max-norm distance between canonical points with the base identification applied.
double chamber_distance(const NonlocalPoint &p, const NonlocalPoint &q, double tol = kChamberTol);

bool locally_equivalent(const Mat4d &u, const Mat4d &v, double tol = kChamberTol);

double entangling_power(const Mat4d &u);
double entangling_power(const NonlocalPoint &a);
double entangling_power_mc(const Mat4d &u, std::size_t n, std::uint64_t seed);

int min_cnot_count(const NonlocalPoint &a, double tol = kChamberTol);

struct ChamberLocation {
    std::string kind;  // vertex, point, edge, face, interior
    std::string name;
};

ChamberLocation chamber_location(const NonlocalPoint &a, double tol = kChamberTol);

}  // namespace ybg
