/*
 * Copyright 2026 The gtrj Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "gtrj/common.hpp"

namespace gtrj {

inline double antisymmetry_defect(const ComplexMatrix& a) {
    return max_abs(ComplexMatrix(a + a.transpose()));
}

/// Dense complex matrix with A = -A^T enforced at construction.
class AntisymmetricMatrix {
  public:
    explicit AntisymmetricMatrix(ComplexMatrix m, double tol = 1e-12) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) {
            throw dimension_error("AntisymmetricMatrix: matrix must be square");
        }
        double scale = std::max(1.0, max_abs(m_));
        if (antisymmetry_defect(m_) > tol * scale) {
            throw validation_error("AntisymmetricMatrix: input is not antisymmetric within tolerance");
        }
        // exact antisymmetry from here on
        m_ = 0.5 * (m_ - m_.transpose().eval());
    }

    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

  private:
    ComplexMatrix m_;
};

/// Pfaffian of an antisymmetric matrix via Parlett-Reid tridiagonalization
/// with partial pivoting, O(n^3). No antisymmetry check; the caller owns that.
inline Complex pfaffian_unchecked(ComplexMatrix a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw dimension_error("pfaffian: matrix must be square");
    if (n % 2 != 0) throw dimension_error("pfaffian: dimension must be even");
    if (n == 0) return Complex{1.0, 0.0};

    Complex result{1.0, 0.0};
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        // pivot: largest |a(i,k)| for i > k
        Eigen::Index kp = k + 1;
        double best = std::abs(a(kp, k));
        for (Eigen::Index i = k + 2; i < n; ++i) {
            double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                kp = i;
            }
        }
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            result = -result;
        }

        const Complex pivot = a(k, k + 1);
        if (pivot == Complex{0.0, 0.0}) return Complex{0.0, 0.0};
        result *= pivot;

        if (k + 2 < n) {
            // congruence update zeroing row k right of k+1; preserves the Pfaffian
            ComplexVector tau = a.block(k, k + 2, 1, n - k - 2).transpose() / pivot;
            ComplexVector col = a.block(k + 2, k + 1, n - k - 2, 1);
            a.bottomRightCorner(n - k - 2, n - k - 2).noalias() += tau * col.transpose();
            a.bottomRightCorner(n - k - 2, n - k - 2).noalias() -= col * tau.transpose();
        }
    }
    return result;
}

inline Complex pfaffian(const AntisymmetricMatrix& a) {
    return pfaffian_unchecked(a.matrix());
}

/// Restores the canonical covariance structure Gamma = I + iA with A real
/// antisymmetric. Idempotent; output satisfies Gamma + Gamma^T = 2I exactly.
inline ComplexMatrix project_covariance(const ComplexMatrix& gamma) {
    if (gamma.rows() != gamma.cols()) {
        throw dimension_error("project_covariance: matrix must be square");
    }
    RealMatrix a = gamma.imag();
    a = 0.5 * (a - a.transpose()).eval();
    ComplexMatrix out = ComplexMatrix::Identity(gamma.rows(), gamma.cols());
    out.imag() = a;
    return out;
}

/// One classical fourth-order Runge-Kutta step for a matrix-valued ODE.
/// `rhs` maps a matrix to its time derivative. Local error O(dt^5).
template <typename Rhs>
ComplexMatrix rk4_matrix_step(const ComplexMatrix& gamma, Rhs&& rhs, double dt) {
    if (!(dt > 0.0)) throw validation_error("rk4_matrix_step: dt must be positive");
    ComplexMatrix k1 = rhs(gamma);
    ComplexMatrix k2 = rhs(ComplexMatrix(gamma + (0.5 * dt) * k1));
    ComplexMatrix k3 = rhs(ComplexMatrix(gamma + (0.5 * dt) * k2));
    ComplexMatrix k4 = rhs(ComplexMatrix(gamma + dt * k3));
    ComplexMatrix out = gamma + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!all_finite(out)) {
        throw numerical_error("rk4_matrix_step: non-finite entries after step (blowup)");
    }
    return out;
}

inline ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
    return m.exp();
}

}  // namespace gtrj
