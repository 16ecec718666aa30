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

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gtrj/gaussian.hpp"

namespace gtrj {

/// Fermion-level description of a 1D chain before compilation:
///   H = sum_s delta_s c^dag_s c_s
///     + sum_b [hop_b c^dag_b c_{b+1} + pair_b c^dag_b c^dag_{b+1} + h.c.]
///     + optional edge drives Omega_1..4,
/// with 2-local jump quadruples L_b = l1 s^-_b + l2 s^+_b + l3 s^-_{b+1} + l4 s^+_{b+1}
/// (spin level) and per-site dephasing rates.
struct ModelSpec {
    int n_sites = 0;
    RealVector delta;       // N
    ComplexVector hop;      // N-1
    ComplexVector pair;     // N-1
    bool has_boundary = false;
    std::array<double, 4> boundary{};  // Omega_1..Omega_4

    struct JumpQuad {
        int bond = 0;  // 0-based; bond == N-1 allowed iff l3 == l4 == 0
        Complex l1, l2, l3, l4;
    };
    std::vector<JumpQuad> jumps;
    RealVector dephasing;  // N entries or empty
    bool disable_strings = false;
};

struct HoneycombBond {
    int site_i = 0;  // A sublattice endpoint
    int site_j = 0;  // B sublattice endpoint
    int orientation = 0;  // 0 = x, 1 = y, 2 = z
    Complex l1, l2;  // jump coefficients on this bond
    int plaq_a = -1, plaq_b = -1;  // adjacent plaquettes
};

struct HoneycombModel {
    int lx = 0, ly = 0;
    std::array<double, 3> coupling{};  // J_x, J_y, J_z
    std::vector<HoneycombBond> bonds;
    std::vector<std::vector<int>> plaquettes;  // bond index lists
    RealVector initial_gauge;  // +-1 per bond
};

/// Everything the trajectory kernel needs: Majorana-basis generator,
/// jump rows with string masks, dephasing flips, observable index offsets.
struct CompiledModel {
    int n_modes = 0;       // N' (= N, or N + 2 with boundary auxiliaries)
    int n_user_sites = 0;  // N
    int site_offset = 0;   // user site s lives at internal site s + offset
    ComplexMatrix x;       // X = 4i H_eff
    ComplexMatrix h_herm;  // antisymmetric matrix of the Hermitian part
    double e0 = 0.0;       // scalar part of the Hermitian Hamiltonian
    std::vector<LinearJump> linear_jumps;
    std::vector<UnitaryJump> unitary_jumps;
    std::optional<HoneycombModel> honeycomb;  // set for honeycomb compilations

    int internal_site(int user_site) const { return user_site + site_offset; }
};

namespace detail {

/// Majorana coefficient vectors of c_s and c^dag_s:
/// c_s = (gamma_{2s} - i gamma_{2s+1})/2.
inline ComplexVector dirac_c(int site, int n_modes) {
    ComplexVector v = ComplexVector::Zero(2 * n_modes);
    v[2 * site] = 0.5;
    v[2 * site + 1] = Complex{0.0, -0.5};
    return v;
}

inline ComplexVector dirac_cdag(int site, int n_modes) {
    ComplexVector v = ComplexVector::Zero(2 * n_modes);
    v[2 * site] = 0.5;
    v[2 * site + 1] = Complex{0.0, 0.5};
    return v;
}

/// Accumulates quadratic forms sum_kl H_kl gamma_k gamma_l (H antisymmetric)
/// plus the scalar remainder: adding t*(u.gamma)(v.gamma) splits as
/// (t/2)(u v^T - v u^T) into H and t*(u.v) into the scalar.
struct QuadraticForm {
    ComplexMatrix h;
    Complex scalar{0.0, 0.0};

    explicit QuadraticForm(int n_modes) : h(ComplexMatrix::Zero(2 * n_modes, 2 * n_modes)) {}

    void add(Complex t, const ComplexVector& u, const ComplexVector& v) {
        h.noalias() += (0.5 * t) * (u * v.transpose());
        h.noalias() -= (0.5 * t) * (v * u.transpose());
        scalar += t * u.cwiseProduct(v).sum();  // plain (unconjugated) u.v
    }
};

}  // namespace detail

inline void validate_model_spec(const ModelSpec& spec) {
    std::vector<std::string> problems;
    const int n = spec.n_sites;
    if (n < 1) problems.push_back("n_sites must be >= 1");
    if (spec.delta.size() != n) problems.push_back("delta must have n_sites entries");
    if (spec.hop.size() != std::max(0, n - 1)) problems.push_back("hop must have n_sites-1 entries");
    if (spec.pair.size() != std::max(0, n - 1)) problems.push_back("pair must have n_sites-1 entries");
    if (spec.dephasing.size() != 0 && spec.dephasing.size() != n) {
        problems.push_back("dephasing must be empty or have n_sites entries");
    }
    for (Eigen::Index s = 0; s < spec.dephasing.size(); ++s) {
        if (!(spec.dephasing[s] >= 0.0)) problems.push_back("dephasing rates must be >= 0");
    }
    for (const auto& j : spec.jumps) {
        if (j.bond < 0 || j.bond >= n) {
            problems.push_back("jump bond index out of range");
        } else if (j.bond == n - 1 && (j.l3 != 0.0 || j.l4 != 0.0)) {
            problems.push_back("jump at the last site cannot touch site n_sites");
        }
        if (j.l1 == 0.0 && j.l2 == 0.0 && j.l3 == 0.0 && j.l4 == 0.0) {
            problems.push_back("jump with all-zero coefficients");
        }
    }
    auto finite = [](double x) { return std::isfinite(x); };
    if (spec.delta.size() == n && !spec.delta.allFinite()) problems.push_back("delta has non-finite entries");
    for (double w : spec.boundary) {
        if (!finite(w)) problems.push_back("boundary drive has non-finite entries");
    }
    if (!problems.empty()) {
        std::ostringstream os;
        os << "invalid ModelSpec:";
        for (const auto& p : problems) os << "\n  - " << p;
        throw validation_error(os.str());
    }
}

/// Jordan-Wigner compilation of a chain ModelSpec into the Majorana-basis
/// generator and jump rows. Boundary drives add two auxiliary sites (JW
/// positions 0 and N+1); every string then runs over internal positions.
inline CompiledModel compile(const ModelSpec& spec) {
    validate_model_spec(spec);
    const int n = spec.n_sites;
    const int offset = spec.has_boundary ? 1 : 0;
    const int n_modes = n + (spec.has_boundary ? 2 : 0);

    CompiledModel model;
    model.n_modes = n_modes;
    model.n_user_sites = n;
    model.site_offset = offset;

    detail::QuadraticForm herm(n_modes);
    auto c = [&](int s) { return detail::dirac_c(s, n_modes); };
    auto cd = [&](int s) { return detail::dirac_cdag(s, n_modes); };

    for (int s = 0; s < n; ++s) {
        const int p = s + offset;
        herm.add(spec.delta[s], cd(p), c(p));
    }
    for (int b = 0; b + 1 < n; ++b) {
        const int p = b + offset;
        herm.add(spec.hop[b], cd(p), c(p + 1));
        herm.add(std::conj(spec.hop[b]), cd(p + 1), c(p));
        herm.add(spec.pair[b], cd(p), cd(p + 1));
        herm.add(std::conj(spec.pair[b]), c(p + 1), c(p));
    }
    if (spec.has_boundary) {
        // H' = sx_0 (O1 sx_1 + O2 sy_1) + sx_{N+1} (O3 sx_N + O4 sy_N) with
        // sx_i sx_{i+1} = i b_i a_{i+1}, sx_i sy_{i+1} = i b_i b_{i+1},
        // sy_i sx_{i+1} = -i a_i a_{i+1} in on-site Majoranas a_s, b_s.
        auto unit = [&](int k) {
            ComplexVector v = ComplexVector::Zero(2 * n_modes);
            v[k] = 1.0;
            return v;
        };
        const auto [o1, o2, o3, o4] = spec.boundary;
        herm.add(Complex{0, o1}, unit(1), unit(2));  // b_aux a_1
        herm.add(Complex{0, o2}, unit(1), unit(3));  // b_aux b_1
        const int last = n_modes - 2;  // internal position of user site N-1
        herm.add(Complex{0, o3}, unit(2 * last + 1), unit(2 * (last + 1)));
        herm.add(Complex{0, -o4}, unit(2 * last), unit(2 * (last + 1)));
    }
    model.h_herm = herm.h;
    model.e0 = herm.scalar.real();

    detail::QuadraticForm dissipative(n_modes);
    for (const auto& q : spec.jumps) {
        const int p = q.bond + offset;
        ComplexVector row = q.l1 * c(p) - q.l2 * cd(p);
        if (q.l3 != 0.0 || q.l4 != 0.0) {
            row += q.l3 * c(p + 1) + q.l4 * cd(p + 1);
        }
        LinearJump jump;
        jump.coeffs = row;
        jump.eta = RealVector::Ones(2 * n_modes);
        if (!spec.disable_strings) {
            for (int m = 0; m <= 2 * p + 1; ++m) jump.eta[m] = -1.0;
        }
        jump.label = "L[" + std::to_string(q.bond) + "]";
        validate_linear_jump(jump, n_modes);
        model.linear_jumps.push_back(std::move(jump));
        dissipative.add(Complex{0.0, -0.5} * 1.0, row.conjugate(), row);
    }
    for (Eigen::Index s = 0; s < spec.dephasing.size(); ++s) {
        if (spec.dephasing[s] == 0.0) continue;
        const int p = static_cast<int>(s) + offset;
        UnitaryJump uj;
        uj.sign_flips = RealVector::Ones(2 * n_modes);
        uj.sign_flips[2 * p] = -1.0;
        uj.sign_flips[2 * p + 1] = -1.0;
        uj.rate = spec.dephasing[s];
        uj.label = "D[" + std::to_string(s) + "]";
        model.unitary_jumps.push_back(std::move(uj));
        // sigma^z jumps shift H_eff by a constant only; nothing to add.
    }

    model.x = 4.0 * I_UNIT * (model.h_herm + dissipative.h);
    return model;
}

inline ModelSpec build_xx_loss(int n, double j, double kappa) {
    if (n < 2) throw validation_error("build_xx_loss: need n >= 2");
    if (!(kappa > 0.0)) throw validation_error("build_xx_loss: need kappa > 0");
    ModelSpec spec;
    spec.n_sites = n;
    spec.delta = RealVector::Zero(n);
    spec.hop = ComplexVector::Constant(n - 1, Complex{-j, 0.0});
    spec.pair = ComplexVector::Zero(n - 1);
    const double amp = std::sqrt(kappa);
    for (int s = 0; s < n; ++s) spec.jumps.push_back({s, amp, 0.0, 0.0, 0.0});
    return spec;
}

inline ModelSpec build_subradiant(int n, double j, double kappa) {
    if (n < 2) throw validation_error("build_subradiant: need n >= 2");
    if (!(kappa > 0.0)) throw validation_error("build_subradiant: need kappa > 0");
    ModelSpec spec;
    spec.n_sites = n;
    spec.delta = RealVector::Zero(n);
    spec.hop = ComplexVector::Constant(n - 1, Complex{-j, 0.0});
    spec.pair = ComplexVector::Zero(n - 1);
    const double amp = std::sqrt(kappa);
    for (int b = 0; b + 1 < n; ++b) spec.jumps.push_back({b, amp, 0.0, amp, 0.0});
    return spec;
}

inline ModelSpec build_tfim(int n, double j, double h, double kappa) {
    if (n < 2) throw validation_error("build_tfim: need n >= 2");
    ModelSpec spec;
    spec.n_sites = n;
    spec.delta = RealVector::Constant(n, 2.0 * h);
    spec.hop = ComplexVector::Constant(n - 1, Complex{j, 0.0});
    spec.pair = ComplexVector::Constant(n - 1, Complex{j, 0.0});
    const double amp = std::sqrt(kappa);
    for (int s = 0; s < n; ++s) spec.jumps.push_back({s, amp, 0.0, 0.0, 0.0});
    return spec;
}

// ---------------------------------------------------------------------------
// Spin observables evaluated on the real antisymmetric part A of Gamma = I+iA.
// All user-facing site indices are 0-based and offset past any auxiliaries.

namespace obs {

inline double occupation_site(const RealMatrix& a, const CompiledModel& m, int site) {
    const int p = m.internal_site(site);
    return 0.5 * (1.0 + a(2 * p, 2 * p + 1));
}

inline double sigma_z(const RealMatrix& a, const CompiledModel& m, int site) {
    return 2.0 * occupation_site(a, m, site) - 1.0;
}

inline double total_density(const RealMatrix& a, const CompiledModel& m) {
    double acc = 0.0;
    for (int s = 0; s < m.n_user_sites; ++s) acc += occupation_site(a, m, s);
    return acc / m.n_user_sites;
}

/// Staggered magnetization (1/N) sum_s (-1)^s sigma^z_s; +1 on [1,0,1,0,...].
inline double afm_order(const RealMatrix& a, const CompiledModel& m) {
    double acc = 0.0;
    for (int s = 0; s < m.n_user_sites; ++s) {
        acc += (s % 2 == 0 ? 1.0 : -1.0) * sigma_z(a, m, s);
    }
    return acc / m.n_user_sites;
}

/// <sigma^z_i sigma^z_j>, i != j, by the four-Majorana Wick expansion.
inline double zz(const RealMatrix& a, const CompiledModel& m, int i, int j) {
    if (i == j) return 1.0;
    if (i > j) std::swap(i, j);
    const int p = m.internal_site(i), q = m.internal_site(j);
    const int ia = 2 * p, ib = 2 * p + 1, ja = 2 * q, jb = 2 * q + 1;
    return a(ia, ib) * a(ja, jb) - a(ia, ja) * a(ib, jb) + a(ia, jb) * a(ib, ja);
}

inline double nn(const RealMatrix& a, const CompiledModel& m, int i, int j) {
    return 0.25 * (1.0 + sigma_z(a, m, i) + sigma_z(a, m, j) + zz(a, m, i, j));
}

/// <sigma^x_s sigma^x_{s+1}> = Re(i Gamma(b_s, a_{s+1})) = -A(2p+1, 2p+2).
inline double xx_bond(const RealMatrix& a, const CompiledModel& m, int bond) {
    const int p = m.internal_site(bond);
    return -a(2 * p + 1, 2 * p + 2);
}

inline double xx_corr_mean(const RealMatrix& a, const CompiledModel& m) {
    double acc = 0.0;
    for (int b = 0; b + 1 < m.n_user_sites; ++b) acc += xx_bond(a, m, b);
    return acc / (m.n_user_sites - 1);
}

/// <H>/N including the scalar part of the Hermitian Hamiltonian.
inline double energy_density(const RealMatrix& a, const CompiledModel& m) {
    Complex acc = m.e0;
    for (Eigen::Index k = 0; k < m.h_herm.rows(); ++k) {
        for (Eigen::Index l = 0; l < m.h_herm.cols(); ++l) {
            acc += m.h_herm(k, l) * Complex{0.0, a(k, l)};
        }
    }
    return acc.real() / m.n_user_sites;
}

}  // namespace obs

}  // namespace gtrj
