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

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace ybg {

// Dense complex matrices. Basis order |00>,|01>,|10>,|11>; qubit 0 is the
// left tensor factor.
template <typename T, int N>
using CMat = Eigen::Matrix<std::complex<T>, N, N, Eigen::RowMajor>;
template <typename T>
using Mat2 = CMat<T, 2>;
template <typename T>
using Mat4 = CMat<T, 4>;
template <typename T>
using Mat8 = CMat<T, 8>;
template <typename T>
using RMat4 = Eigen::Matrix<T, 4, 4, Eigen::RowMajor>;

using cd = std::complex<double>;
using Mat2d = Mat2<double>;
using Mat4d = Mat4<double>;
using Mat8d = Mat8<double>;
using RMat4d = RMat4<double>;

inline constexpr double kPi = std::numbers::pi;

class NumericalError : public std::runtime_error {
   public:
    NumericalError(const std::string &what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const { return residual_; }

   private:
    double residual_;
};

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

// Kronecker product of fixed-size operands; results larger than 8x8 do not compile.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b) {
    constexpr int rows = int(DA::RowsAtCompileTime) * int(DB::RowsAtCompileTime);
    constexpr int cols = int(DA::ColsAtCompileTime) * int(DB::ColsAtCompileTime);
    constexpr int order = cols == 1 ? Eigen::ColMajor : Eigen::RowMajor;
    static_assert(DA::RowsAtCompileTime > 0 && DB::RowsAtCompileTime > 0, "kron needs fixed-size operands");
    static_assert(rows <= 8 && cols <= 8, "kron result exceeds 8x8");
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DA::Scalar, typename DB::Scalar>::ReturnType;
    return Eigen::Matrix<Scalar, rows, cols, order>(Eigen::kroneckerProduct(a.derived(), b.derived()));
}

template <typename Derived>
RealOf<Derived> unitarity_residual(const Eigen::MatrixBase<Derived> &m) {
    using M = Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
    return (m.adjoint() * m - M::Identity(m.rows(), m.cols())).norm();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &m, RealOf<Derived> tol = 1e-9) {
    return unitarity_residual(m) <= tol;
}

// min over phi of ||A - e^{i phi} B||_F, evaluated at the optimal phase.
template <typename DA, typename DB>
RealOf<DA> phase_distance(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b) {
    using T = RealOf<DA>;
    const std::complex<T> t = (b.adjoint() * a).trace();
    const std::complex<T> phase = std::abs(t) > T(0) ? t / std::abs(t) : std::complex<T>(1);
    return (a - phase * b).norm();
}

template <typename T>
struct CheckedDistance {
    T distance;
    bool inputs_unitary;
};

template <typename DA, typename DB>
CheckedDistance<RealOf<DA>> phase_distance_checked(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b,
                                                   RealOf<DA> tol = 1e-8) {
    return {phase_distance(a, b), is_unitary(a, tol) && is_unitary(b, tol)};
}

// Nearest unitary in Frobenius norm (polar factor).
template <typename T, int N>
CMat<T, N> nearest_unitary(const CMat<T, N> &m) {
    Eigen::JacobiSVD<CMat<T, N>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

namespace gates {

template <typename T = double>
Mat2<T> pauli(int k) {
    using C = std::complex<T>;
    Mat2<T> m;
    switch (k) {
        case 0:
            m << C(1), C(0), C(0), C(1);
            break;
        case 1:
            m << C(0), C(1), C(1), C(0);
            break;
        case 2:
            m << C(0), C(0, -1), C(0, 1), C(0);
            break;
        case 3:
            m << C(1), C(0), C(0), C(-1);
            break;
        default:
            throw std::invalid_argument("pauli index must be 0..3");
    }
    return m;
}

template <typename T = double>
Mat2<T> hadamard() {
    const T s = T(1) / std::sqrt(T(2));
    Mat2<T> m;
    m << s, s, s, -s;
    return m;
}

template <typename T = double>
Mat2<T> phase_s() {
    Mat2<T> m;
    m << T(1), T(0), T(0), std::complex<T>(0, 1);
    return m;
}

template <typename T = double>
Mat2<T> phase_t() {
    Mat2<T> m;
    m << T(1), T(0), T(0), std::polar(T(1), std::numbers::pi_v<T> / 4);
    return m;
}

template <typename T = double>
Mat2<T> rz(T theta) {
    Mat2<T> m;
    m << std::polar(T(1), -theta / 2), T(0), T(0), std::polar(T(1), theta / 2);
    return m;
}

template <typename T = double>
Mat2<T> rx(T theta) {
    Mat2<T> m;
    m << std::cos(theta / 2), std::complex<T>(0, -std::sin(theta / 2)), std::complex<T>(0, -std::sin(theta / 2)),
        std::cos(theta / 2);
    return m;
}

template <typename T = double>
Mat4<T> cnot(int control = 0) {
    Mat4<T> m = Mat4<T>::Zero();
    if (control == 0) {
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = T(1);
    } else {
        m(0, 0) = m(2, 2) = m(1, 3) = m(3, 1) = T(1);
    }
    return m;
}

template <typename T = double>
Mat4<T> swap() {
    Mat4<T> m = Mat4<T>::Zero();
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = T(1);
    return m;
}

template <typename T = double>
Mat4<T> iswap() {
    Mat4<T> m = Mat4<T>::Zero();
    m(0, 0) = m(3, 3) = T(1);
    m(1, 2) = m(2, 1) = std::complex<T>(0, 1);
    return m;
}

}  // namespace gates

// Haar-distributed U(N): QR of a complex Ginibre matrix with the R-diagonal phases removed.
template <int N, typename T = double, typename Rng>
CMat<T, N> haar_unitary(Rng &rng) {
    std::normal_distribution<T> g;
    CMat<T, N> z;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            z(i, j) = std::complex<T>(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<CMat<T, N>> qr(z);
    CMat<T, N> q = qr.householderQ();
    for (int j = 0; j < N; ++j) {
        const std::complex<T> d = qr.matrixQR()(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

template <typename T>
struct SymUnitaryEig {
    std::array<T, 4> angles;
    RMat4<T> basis;
    T residual;
};

// M = O diag(e^{i theta}) O^T for symmetric unitary M with O real orthogonal.
// Re M and Im M commute, so an eigenbasis of Re M + t Im M for generic t
// diagonalizes both, degenerate spectra included.
template <typename T>
SymUnitaryEig<T> sym_unitary_eig(const Mat4<T> &m, T tol = T(1e-9)) {
    if ((m - m.transpose()).norm() > T(1e-8)) {
        throw std::invalid_argument("sym_unitary_eig: input is not symmetric");
    }
    if (unitarity_residual(m) > T(1e-8)) {
        throw std::invalid_argument("sym_unitary_eig: input is not unitary");
    }
    static constexpr std::array<double, 6> kMix = {0.6180339887498949, 0.4142135623730951, 1.3247179572447460,
                                                   0.2360679774997897, 2.7182818284590452, 0.1415926535897932};
    const RMat4<T> re = m.real();
    const RMat4<T> im = m.imag();
    SymUnitaryEig<T> best{{}, RMat4<T>::Identity(), std::numeric_limits<T>::infinity()};
    for (double t : kMix) {
        Eigen::SelfAdjointEigenSolver<RMat4<T>> es(re + T(t) * im);
        const RMat4<T> o = es.eigenvectors();
        const Mat4<T> d = o.transpose().template cast<std::complex<T>>() * m * o.template cast<std::complex<T>>();
        SymUnitaryEig<T> cand;
        cand.basis = o;
        Mat4<T> diag = Mat4<T>::Zero();
        for (int k = 0; k < 4; ++k) {
            cand.angles[k] = std::arg(d(k, k));
            diag(k, k) = std::polar(T(1), cand.angles[k]);
        }
        const Mat4<T> oc = o.template cast<std::complex<T>>();
        cand.residual = (m - oc * diag * oc.transpose()).norm();
        if (cand.residual < best.residual) {
            best = cand;
        }
        if (best.residual <= tol) {
            break;
        }
    }
    return best;
}

}  // namespace ybg
