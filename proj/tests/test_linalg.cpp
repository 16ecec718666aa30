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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gtrj/linalg.hpp"

using namespace gtrj;

namespace {

ComplexMatrix random_antisym(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> n01;
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = Complex{n01(rng), n01(rng)};
    }
    return 0.5 * (m - m.transpose()).eval();
}

}  // namespace

TEST_CASE("pfaffian of 2x2 and 4x4 matches the closed forms", "[linalg]") {
    const Complex a{1.3, -0.7};
    ComplexMatrix m2(2, 2);
    m2 << 0.0, a, -a, 0.0;
    REQUIRE(std::abs(pfaffian(AntisymmetricMatrix(m2)) - a) < 1e-14);

    std::mt19937_64 rng(11);
    ComplexMatrix m4 = random_antisym(4, rng);
    const Complex expected = m4(0, 1) * m4(2, 3) - m4(0, 2) * m4(1, 3) + m4(0, 3) * m4(1, 2);
    REQUIRE(std::abs(pfaffian(AntisymmetricMatrix(m4)) - expected) < 1e-13);
}

TEST_CASE("pfaffian squared equals the determinant", "[linalg]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 5));  // 2..10
        ComplexMatrix m = random_antisym(n, rng);
        const Complex pf = pfaffian(AntisymmetricMatrix(m));
        const Complex det = m.determinant();
        REQUIRE(std::abs(pf * pf - det) <= 1e-10 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("pfaffian of a rank-deficient antisymmetric matrix vanishes", "[linalg]") {
    std::mt19937_64 rng(23);
    ComplexMatrix m = random_antisym(8, rng);
    // duplicate row/col pair keeps antisymmetry but kills the Pfaffian
    m.row(5) = m.row(2);
    m.col(5) = m.col(2);
    m(2, 5) = m(5, 2) = 0.0;
    m(5, 5) = 0.0;
    const Complex pf = pfaffian(AntisymmetricMatrix(m));
    REQUIRE(std::abs(pf) <= 1e-12 * max_abs(m));
}

TEST_CASE("pfaffian flips sign under a simultaneous row/col swap", "[linalg]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix m = random_antisym(6, rng);
        const int i = static_cast<int>(rng() % 6);
        int j = static_cast<int>(rng() % 6);
        if (i == j) j = (j + 1) % 6;
        ComplexMatrix swapped = m;
        swapped.row(i).swap(swapped.row(j));
        swapped.col(i).swap(swapped.col(j));
        const Complex pf = pfaffian(AntisymmetricMatrix(m));
        const Complex pfs = pfaffian(AntisymmetricMatrix(swapped));
        REQUIRE(std::abs(pf + pfs) < 1e-11 * std::max(1.0, std::abs(pf)));
    }
}

TEST_CASE("pfaffian input validation", "[linalg]") {
    ComplexMatrix odd = ComplexMatrix::Zero(3, 3);
    odd(0, 1) = 1.0;
    odd(1, 0) = -1.0;
    REQUIRE_THROWS_AS(pfaffian(AntisymmetricMatrix(odd)), dimension_error);

    ComplexMatrix sym = ComplexMatrix::Ones(2, 2);
    REQUIRE_THROWS_AS(AntisymmetricMatrix(sym), validation_error);
}

TEST_CASE("project_covariance restores the canonical structure", "[linalg]") {
    ComplexMatrix vac(2, 2);
    vac << 1.0, Complex{0, -1}, Complex{0, 1}, 1.0;
    REQUIRE(max_abs(ComplexMatrix(project_covariance(vac) - vac)) < 1e-15);

    std::mt19937_64 rng(41);
    std::normal_distribution<double> n01;
    ComplexMatrix noisy = vac;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) noisy(i, j) += 1e-9 * Complex{n01(rng), n01(rng)};
    }
    ComplexMatrix p = project_covariance(noisy);
    REQUIRE(max_abs(ComplexMatrix(p + p.transpose() - 2.0 * ComplexMatrix::Identity(2, 2))) <= 1e-15);
    REQUIRE(max_abs(ComplexMatrix(project_covariance(p) - p)) == 0.0);
}

TEST_CASE("rk4 step: zero generator and scalar exponential", "[linalg]") {
    ComplexMatrix g(2, 2);
    g << 1.0, Complex{0, -1}, Complex{0, 1}, 1.0;
    ComplexMatrix out = rk4_matrix_step(g, [](const ComplexMatrix& m) { return ComplexMatrix::Zero(m.rows(), m.cols()).eval(); }, 0.1);
    REQUIRE(max_abs(ComplexMatrix(out - g)) == 0.0);

    const Complex lambda{-0.4, 0.9};
    const double dt = 0.05;
    ComplexMatrix x(1, 1);
    x(0, 0) = 1.0;
    ComplexMatrix stepped = rk4_matrix_step(x, [&](const ComplexMatrix& m) { return ComplexMatrix(lambda * m); }, dt);
    const Complex z = lambda * dt;
    const Complex taylor = 1.0 + z + z * z / 2.0 + z * z * z / 6.0 + z * z * z * z / 24.0;
    REQUIRE(std::abs(stepped(0, 0) - taylor) < 1e-15);
}

TEST_CASE("rk4 step matches the matrix exponential to fifth order", "[linalg]") {
    std::mt19937_64 rng(53);
    std::normal_distribution<double> n01;
    ComplexMatrix m(6, 6);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) m(i, j) = 0.3 * Complex{n01(rng), n01(rng)};
    }
    ComplexMatrix g0(6, 6);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) g0(i, j) = Complex{n01(rng), n01(rng)};
    }
    auto rhs = [&](const ComplexMatrix& g) { return ComplexMatrix(m * g); };
    auto err_at = [&](double dt) {
        ComplexMatrix exact = matrix_exponential(ComplexMatrix(dt * m)) * g0;
        return max_abs(ComplexMatrix(rk4_matrix_step(g0, rhs, dt) - exact));
    };
    const double e1 = err_at(0.02);
    const double e2 = err_at(0.01);
    REQUIRE(e1 < 1e-9);
    // local error O(dt^5): halving dt should shrink it by roughly 32
    REQUIRE(e1 / e2 > 20.0);
    REQUIRE(e1 / e2 < 45.0);
}

TEST_CASE("rk4 step reports blowup", "[linalg]") {
    ComplexMatrix g = ComplexMatrix::Ones(2, 2);
    auto bad = [](const ComplexMatrix& m) {
        ComplexMatrix out = m;
        out(0, 0) = Complex{std::numeric_limits<double>::infinity(), 0.0};
        return out;
    };
    REQUIRE_THROWS_AS(rk4_matrix_step(g, bad, 0.1), numerical_error);
}
