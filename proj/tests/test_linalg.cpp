// Copyright 2026 The qcrb Authors
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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "qcrb/linalg.h"
#include "support.h"

using namespace qcrb;

namespace {

double oracle_trace_abs(const CMatrix &m) {
    double s = 0.0;
    for (const auto &z : oracle::charpoly_eigenvalues(m)) {
        s += static_cast<double>(std::abs(z));
    }
    return s;
}

}  // namespace

TEST(linalg, hermitian_eigen_reconstructs) {
    std::mt19937_64 rng(1);
    for (int d = 1; d <= 6; ++d) {
        const CMatrix h = random_hermitian(rng, d);
        const HermitianEigen es = eig_hermitian(h);
        EXPECT_LT((es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint() - h).norm(), 1e-12);
        EXPECT_LT((es.vectors.adjoint() * es.vectors - CMatrix::Identity(d, d)).norm(), 1e-12);
        EXPECT_TRUE(std::is_sorted(es.values.data(), es.values.data() + d));
    }
}

TEST(linalg, eig_rejects_non_hermitian) {
    CMatrix m(2, 2);
    m << 1, 2, 0, 1;
    try {
        eig_hermitian(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonHermitianInput);
    }
}

TEST(linalg, general_eigenvalues_match_charpoly_oracle) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + trial % 4;
        const CMatrix m = random_complex(rng, d, d);
        auto ours = eigenvalues_general(m);
        auto ref = oracle::charpoly_eigenvalues(m);
        for (const auto &z : ref) {
            double best = 1e9;
            for (Eigen::Index i = 0; i < ours.size(); ++i) {
                best = std::min(best, std::abs(ours(i) - Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()))));
            }
            EXPECT_LT(best, 1e-8);
        }
        EXPECT_NEAR(trace_abs(m), oracle_trace_abs(m), 1e-8);
    }
}

TEST(linalg, trace_abs_two_by_two_closed_form) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix m = random_complex(rng, 2, 2);
        const Complex tr = m.trace();
        const Complex disc = std::sqrt(tr * tr - 4.0 * m.determinant());
        const double expected = std::abs(0.5 * (tr + disc)) + std::abs(0.5 * (tr - disc));
        EXPECT_NEAR(trace_abs(m), expected, 1e-10);
    }
}

TEST(linalg, trace_abs_of_nilpotent_is_zero) {
    CMatrix n = CMatrix::Zero(4, 4);
    n(0, 1) = 1.0;
    n(1, 2) = 2.0;
    n(0, 3) = Complex(0.0, 3.0);
    EXPECT_EQ(trace_abs(n), 0.0);
    CMatrix j = CMatrix::Zero(3, 3);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    EXPECT_LT(trace_abs(j), 1e-12);
}

TEST(linalg, trace_abs_hermitian_is_nuclear_norm) {
    std::mt19937_64 rng(4);
    const CMatrix h = random_hermitian(rng, 5);
    EXPECT_NEAR(trace_abs(h), eigenvalues_hermitian(h).cwiseAbs().sum(), 1e-10);
}

TEST(linalg, psd_order) {
    CMatrix a = CMatrix::Identity(2, 2);
    CMatrix b = 2.0 * CMatrix::Identity(2, 2);
    EXPECT_TRUE(psd_order(a, b, 1e-12));
    EXPECT_FALSE(psd_order(b, a, 1e-12));
    EXPECT_THROW(psd_order(a, CMatrix::Identity(3, 3), 1e-12), Error);
}

TEST(linalg, trace_inverse_and_errors) {
    RMatrix j(2, 2);
    j << 2, 1, 1, 3;
    EXPECT_NEAR(trace_inverse(j, 1e-12, ErrorCode::SingularQfim), 1.0, 1e-14);
    RMatrix s(2, 2);
    s << 1, 1, 1, 1;
    try {
        trace_inverse(s, 1e-12, ErrorCode::SingularQfim);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularQfim);
    }
}

TEST(linalg, random_unitary_is_unitary) {
    std::mt19937_64 rng(5);
    const CMatrix u = random_unitary(rng, 7);
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(7, 7)).norm(), 1e-12);
}

TEST(linalg, commutator_shape_mismatch) {
    EXPECT_THROW(commutator(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), Error);
}
