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

#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include "gtrj/common.hpp"

namespace gtrj {

using SparseOp = Eigen::SparseMatrix<Complex>;

// Qubit basis convention: bit s of the basis index is the occupation of site
// s (site 0 = least significant bit); |1> = occupied = spin up.

inline SparseOp sparse_identity(Eigen::Index dim) {
    SparseOp id(dim, dim);
    id.setIdentity();
    return id;
}

inline SparseOp local_2x2(Complex a00, Complex a01, Complex a10, Complex a11) {
    SparseOp m(2, 2);
    if (a00 != 0.0) m.insert(0, 0) = a00;
    if (a10 != 0.0) m.insert(1, 0) = a10;
    if (a01 != 0.0) m.insert(0, 1) = a01;
    if (a11 != 0.0) m.insert(1, 1) = a11;
    m.makeCompressed();
    return m;
}

inline SparseOp pauli_x() { return local_2x2(0, 1, 1, 0); }
inline SparseOp pauli_y() { return local_2x2(0, Complex{0, -1}, Complex{0, 1}, 0); }
inline SparseOp pauli_z() { return local_2x2(-1, 0, 0, 1); }  // 2n - 1
inline SparseOp lower_op() { return local_2x2(0, 1, 0, 0); }  // |0><1|
inline SparseOp raise_op() { return local_2x2(0, 0, 1, 0); }  // |1><0|
inline SparseOp number_op() { return local_2x2(0, 0, 0, 1); }

/// Embeds a local 2x2 operator at `site` in an n-qubit register.
inline SparseOp op_at(const SparseOp& local, int site, int n_sites) {
    if (site < 0 || site >= n_sites) throw dimension_error("op_at: site out of range");
    const Eigen::Index hi = Eigen::Index(1) << (n_sites - 1 - site);
    const Eigen::Index lo = Eigen::Index(1) << site;
    SparseOp tmp = Eigen::kroneckerProduct(local, sparse_identity(lo)).eval();
    return Eigen::kroneckerProduct(sparse_identity(hi), tmp).eval();
}

/// Parity string Pi_{j < site} (-1)^{n_j} as an explicit diagonal +-1 matrix.
inline SparseOp parity_string(int site, int n_sites) {
    const Eigen::Index dim = Eigen::Index(1) << n_sites;
    SparseOp p(dim, dim);
    p.reserve(Eigen::VectorXi::Constant(dim, 1));
    const Eigen::Index mask = (Eigen::Index(1) << site) - 1;
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int ones = __builtin_popcountll(static_cast<unsigned long long>(b & mask));
        p.insert(b, b) = (ones % 2 == 0) ? 1.0 : -1.0;
    }
    p.makeCompressed();
    return p;
}

/// Fermion annihilation operator c_s = parity string x local lowering.
inline SparseOp fermion_c(int site, int n_sites) {
    return (parity_string(site, n_sites) * op_at(lower_op(), site, n_sites)).eval();
}

inline SparseOp fermion_cdag(int site, int n_sites) {
    return SparseOp(fermion_c(site, n_sites).adjoint());
}

/// Majorana operators: gamma_{2s} = c_s + c_s^dag, gamma_{2s+1} = i(c_s - c_s^dag).
inline SparseOp majorana(int index, int n_sites) {
    const int site = index / 2;
    SparseOp c = fermion_c(site, n_sites);
    SparseOp cd = SparseOp(c.adjoint());
    if (index % 2 == 0) return (c + cd).eval();
    return (Complex{0, 1} * (c - cd)).eval();
}

}  // namespace gtrj
