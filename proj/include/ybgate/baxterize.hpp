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

#include <functional>
#include <stdexcept>
#include <vector>

#include "ybgate/braid.hpp"
#include "ybgate/linalg.hpp"
#include "ybgate/weyl.hpp"

namespace ybg {

class SingularParameterError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct SpectralDecomp {
    std::vector<cd> lambdas;
    std::vector<Mat4d> projectors;

    Mat4d matrix() const;
};

SpectralDecomp spectral_decompose(const Mat4d &b, double group_tol = 1e-8);

// (B + x l1 l2 B^{-1}) / l2
Mat4d baxterize2(const Mat4d &b, cd l1, cd l2, cd x);

struct YbCoefficients {
    cd alpha, beta, gamma;
};

YbCoefficients yb_coefficients(cd x, cd l1, cd l2, cd l3);

struct Baxterized {
    Mat4d r;
    YbCoefficients coefficients;
};

// alpha B + beta 1 + gamma B^{-1}
Baxterized baxterize3(const Mat4d &b, cd l1, cd l2, cd l3, cd x);

// sum_j Theta_j(x) P_j with the eigenvalues taken in the stored order.
Mat4d baxterize_spectral(const SpectralDecomp &s, cd x);

// Rescale by the positive scalar that makes R unitary when R is a multiple of a unitary.
Mat4d normalize_unitary(const Mat4d &r);

struct YbSpec {
    Family family = Family::I;
    int kind = 1;
    double spectral = 0.0;  // mu for families I-III, chi for IV
    std::vector<double> phi;

    void validate() const;
    BraidSpec braid() const;
    YbSpec with_spectral(double s) const;
};

// Braid eigenvalues in the ordering that defines the first kind.
std::vector<cd> braid_eigenvalues(const BraidSpec &spec);

// Multiplicative spectral parameter used by the Baxterization that reproduces build_yb.
double yb_spectral_x(const YbSpec &spec);

Mat4d build_yb(const YbSpec &spec);

// The same gate assembled from the braid gate, eigenvalues and yb_spectral_x, normalised.
Mat4d yb_from_baxterization(const YbSpec &spec);

// Both sides of the YBE built from R(x), R(xy), R(y); residual after the best complex rescale.
double ybe_residual(const Mat4d &rx, const Mat4d &rxy, const Mat4d &ry);

// Additive form: R(mu), R(mu + nu), R(nu).
double ybe_residual(const std::function<Mat4d(double)> &r, double mu, double nu);

double ybe_residual(const YbSpec &spec, double mu, double nu);

NonlocalPoint yb_nonlocal_closed(const YbSpec &spec);
double yb_ep(const YbSpec &spec);

// phase_distance(build_yb at spectral = mu, braid gate); mu is the large negative value.
double braid_limit_residual(const YbSpec &spec, double mu);

}  // namespace ybg
