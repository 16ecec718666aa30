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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gtrj {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex I_UNIT{0.0, 1.0};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure in an integrator or kernel (blowup, lost structure).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state violated a physical contract (negative rate, lost purity, ...).
struct state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dark_state_error : state_error {
    using state_error::state_error;
};

inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const RealMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

}  // namespace gtrj
