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

#include <iostream>
#include <string>
#include <vector>

#include "gtrj/linalg.hpp"

namespace gtrj {

// Majorana convention: site s (0-based) owns gamma[2s] = c_s + c_s^dag and
// gamma[2s+1] = i(c_s - c_s^dag), so <gamma_{2s} gamma_{2s+1}> = i(2n_s - 1).

/// Pure fermionic Gaussian state tracked through its Majorana covariance
/// matrix Gamma_ij = <gamma_i gamma_j>.
struct CovarianceState {
    int n_modes = 0;
    ComplexMatrix gamma;  // 2N x 2N, Gamma = I + iA with A real antisymmetric
    double time = 0.0;
};

/// Generator X = 4iH of the covariance flow, H the antisymmetric matrix of
/// the (generally non-Hermitian) quadratic Hamiltonian H_eff = sum H_ij g_i g_j.
struct QuadraticGenerator {
    ComplexMatrix x;
};

/// Linear jump operator L' = sum_j coeffs[j] gamma_j together with the +-1
/// string phases eta implementing the commutation pattern of its string.
struct LinearJump {
    ComplexVector coeffs;
    RealVector eta;
    std::string label;
};

/// Self-inverse sign-flip jump (e.g. a dephasing event): gamma_m -> s_m gamma_m.
struct UnitaryJump {
    RealVector sign_flips;
    double rate = 0.0;
    std::string label;
};

inline void validate_linear_jump(const LinearJump& j, int n_modes) {
    if (j.coeffs.size() != 2 * n_modes || j.eta.size() != 2 * n_modes) {
        throw dimension_error("LinearJump: coefficient/eta length must be 2N");
    }
    if (j.coeffs.norm() == 0.0) throw validation_error("LinearJump: coefficients are all zero");
    for (Eigen::Index m = 0; m < j.eta.size(); ++m) {
        if (j.eta[m] != 1.0 && j.eta[m] != -1.0) {
            throw validation_error("LinearJump: eta mask entries must be +1 or -1");
        }
    }
}

inline CovarianceState product_state(const std::vector<int>& occupations) {
    const int n = static_cast<int>(occupations.size());
    if (n < 1) throw validation_error("product_state: need at least one mode");
    CovarianceState st;
    st.n_modes = n;
    st.gamma = ComplexMatrix::Identity(2 * n, 2 * n);
    for (int s = 0; s < n; ++s) {
        const int occ = occupations[s];
        if (occ != 0 && occ != 1) throw validation_error("product_state: occupations must be 0 or 1");
        const double a = 2.0 * occ - 1.0;
        st.gamma(2 * s, 2 * s + 1) = Complex{0.0, a};
        st.gamma(2 * s + 1, 2 * s) = Complex{0.0, -a};
    }
    return st;
}

/// d Gamma/dt = Gamma X - X* Gamma + (1/2) Gamma (X* - X) Gamma.
inline ComplexMatrix covariance_flow_rhs(const ComplexMatrix& gamma, const ComplexMatrix& x) {
    ComplexMatrix xc = x.conjugate();
    ComplexMatrix w = xc - x;
    ComplexMatrix rhs = gamma * x - xc * gamma;
    rhs.noalias() += 0.5 * (gamma * (w * gamma));
    return rhs;
}

/// One RK4 step of the nonlinear covariance flow followed by projection back
/// onto the canonical manifold.
inline CovarianceState evolve_no_jump(const CovarianceState& state, const QuadraticGenerator& gen,
                                      double dt) {
    if (gen.x.rows() != state.gamma.rows()) {
        throw dimension_error("evolve_no_jump: generator/state dimension mismatch");
    }
    CovarianceState out = state;
    out.gamma = rk4_matrix_step(
        state.gamma, [&gen](const ComplexMatrix& g) { return covariance_flow_rhs(g, gen.x); }, dt);
    out.gamma = project_covariance(out.gamma);
    out.time += dt;
    return out;
}

/// <L'^dag L'> = sum_kl conj(l_k) l_l Gamma_kl, the point-process rate.
inline double jump_rate(const CovarianceState& state, const LinearJump& jump) {
    if (jump.coeffs.size() != state.gamma.rows()) {
        throw dimension_error("jump_rate: jump/state dimension mismatch");
    }
    const Complex p = (jump.coeffs.conjugate().transpose() * state.gamma * jump.coeffs).value();
    const double scale = std::max(1.0, std::abs(p));
    if (std::abs(p.imag()) > 1e-8 * scale) {
        throw state_error("jump_rate: rate has a non-negligible imaginary part");
    }
    if (p.real() < -1e-10) {
        throw state_error("jump_rate: negative rate, covariance is corrupted");
    }
    return std::max(0.0, p.real());
}

/// Post-jump covariance for a string-carrying linear jump,
///   Gamma'_mn = eta_m eta_n (Gamma_mn + (G_m F_n - G_n F_m)/p),
/// with G = conj(l)^T Gamma, F = Gamma l and p the jump rate.
inline CovarianceState apply_linear_jump(const CovarianceState& state, const LinearJump& jump) {
    const double p = jump_rate(state, jump);
    if (p <= 1e-14) {
        throw dark_state_error("apply_linear_jump: jump rate vanishes (dark state)");
    }
    Eigen::RowVectorXcd g = jump.coeffs.conjugate().transpose() * state.gamma;
    ComplexVector f = state.gamma * jump.coeffs;
    CovarianceState out = state;
    out.gamma = state.gamma + (g.transpose() * f.transpose() - f * g) / p;
    out.gamma = jump.eta.asDiagonal() * out.gamma * jump.eta.asDiagonal();
    out.gamma = project_covariance(out.gamma);
    return out;
}

inline CovarianceState apply_unitary_jump(const CovarianceState& state, const UnitaryJump& jump) {
    if (jump.sign_flips.size() != state.gamma.rows()) {
        throw dimension_error("apply_unitary_jump: jump/state dimension mismatch");
    }
    CovarianceState out = state;
    out.gamma = jump.sign_flips.asDiagonal() * state.gamma * jump.sign_flips.asDiagonal();
    return out;
}

/// Wick expectation <gamma_{i1} ... gamma_{i2k}> for strictly increasing
/// indices: the Pfaffian of (Gamma - I) restricted to the requested rows/cols.
inline Complex expectation_majorana_string(const CovarianceState& state,
                                           const std::vector<int>& indices) {
    const Eigen::Index dim = state.gamma.rows();
    if (indices.size() % 2 != 0) {
        throw validation_error("expectation_majorana_string: odd-length strings vanish and are rejected");
    }
    for (size_t a = 0; a < indices.size(); ++a) {
        if (indices[a] < 0 || indices[a] >= dim) {
            throw dimension_error("expectation_majorana_string: index out of range");
        }
        if (a > 0 && indices[a] <= indices[a - 1]) {
            throw validation_error("expectation_majorana_string: indices must be strictly increasing");
        }
    }
    const Eigen::Index k = static_cast<Eigen::Index>(indices.size());
    if (k == 0) return Complex{1.0, 0.0};
    ComplexMatrix sub(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            sub(a, b) = state.gamma(indices[a], indices[b]);
        }
        sub(a, a) -= 1.0;
    }
    sub = 0.5 * (sub - sub.transpose().eval());
    return pfaffian_unchecked(sub);
}

inline double occupation(const CovarianceState& state, int site) {
    if (site < 0 || site >= state.n_modes) throw dimension_error("occupation: site out of range");
    return 0.5 * (1.0 + state.gamma(2 * site, 2 * site + 1).imag());
}

/// || A A + I ||_max with A = -i(Gamma - I); zero exactly for pure states.
inline double purity_defect(const CovarianceState& state) {
    const Eigen::Index dim = state.gamma.rows();
    ComplexMatrix a = -I_UNIT * (state.gamma - ComplexMatrix::Identity(dim, dim));
    ComplexMatrix aa = a * a + ComplexMatrix::Identity(dim, dim);
    return max_abs(aa);
}

enum class EntropyKind { vonNeumann, renyi2 };

namespace detail {

inline double binary_entropy_nats(double p) {
    double s = 0.0;
    if (p > 0.0) s -= p * std::log(p);
    const double q = 1.0 - p;
    if (q > 0.0) s -= q * std::log(q);
    return s;
}

/// Entropy carried by a contiguous Majorana index block [start, start+len).
inline double entropy_of_block(const ComplexMatrix& gamma, Eigen::Index start, Eigen::Index len,
                               EntropyKind kind) {
    RealMatrix a = (-I_UNIT * (gamma.block(start, start, len, len) -
                               ComplexMatrix::Identity(len, len)))
                       .real();
    a = 0.5 * (a - a.transpose()).eval();
    Eigen::JacobiSVD<RealMatrix> svd(a);
    const auto& sv = svd.singularValues();
    double total = 0.0;
    for (Eigen::Index k = 0; k + 1 < sv.size(); k += 2) {
        double nu = sv[k];
        if (nu > 1.0 + 1e-6) {
            std::cerr << "gtrj: entanglement_entropy: clamping nu = " << nu << " to 1\n";
        }
        nu = std::min(1.0, std::max(0.0, nu));
        const double pp = 0.5 * (1.0 + nu);
        const double pm = 0.5 * (1.0 - nu);
        if (kind == EntropyKind::vonNeumann) {
            total += binary_entropy_nats(pp);
        } else {
            total += -std::log(pp * pp + pm * pm);
        }
    }
    return total;
}

}  // namespace detail

/// Bipartite entanglement entropy (nats) of the contiguous cut A = sites [0, m).
inline double entanglement_entropy(const CovarianceState& state, int cut, EntropyKind kind) {
    if (cut < 1 || cut >= state.n_modes) {
        throw dimension_error("entanglement_entropy: cut must satisfy 1 <= m < N");
    }
    if (purity_defect(state) > 1e-6) {
        throw state_error(
            "entanglement_entropy: global state is not pure; compute per trajectory, not on an "
            "averaged covariance");
    }
    return detail::entropy_of_block(state.gamma, 0, 2 * cut, kind);
}

}  // namespace gtrj
