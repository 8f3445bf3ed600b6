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

#include <gtest/gtest.h>

#include "qcrb/catalog.h"
#include "qcrb/optimizer.h"
#include "qcrb/povm.h"
#include "support.h"

using namespace qcrb;

namespace {

Povm computational_basis(int d) {
    Povm p;
    p.dim = d;
    for (int i = 0; i < d; ++i) {
        CMatrix e = CMatrix::Zero(d, d);
        e(i, i) = 1.0;
        p.elements.push_back(e);
    }
    return p;
}

StatisticalModel z_qubit() {
    StatisticalModel m;
    m.dim = 2;
    m.num_params = 1;
    m.rho = CMatrix::Identity(2, 2) / 2.0;
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 0.5;
    z(1, 1) = -0.5;
    m.drho = {z};
    return m;
}

}  // namespace

TEST(povm, validation) {
    EXPECT_TRUE(validate_povm(computational_basis(3)).ok);
    EXPECT_TRUE(validate_povm(computational_basis(3)).projective);
    Povm p = computational_basis(3);
    p.elements.pop_back();
    EXPECT_FALSE(validate_povm(p).ok);
    Povm neg = computational_basis(2);
    neg.elements[0](0, 0) = 1.5;
    neg.elements[1](0, 0) = -0.5;
    EXPECT_FALSE(validate_povm(neg).ok);
    EXPECT_FALSE(validate_povm(Povm{}).ok);
}

TEST(povm, qubit_z_measurement_has_unit_information) {
    const RMatrix f = classical_fisher(z_qubit(), computational_basis(2));
    EXPECT_NEAR(f(0, 0), 1.0, 1e-15);
}

TEST(povm, fisher_matches_direct_sum) {
    std::mt19937_64 rng(51);
    const StatisticalModel m = oracle::random_model(rng, 4, 4, 2);
    const Povm p = rank_one_povm(random_complex(rng, 6, 4));
    RMatrix ref = RMatrix::Zero(2, 2);
    for (const auto &e : p.elements) {
        const double pk = (m.rho * e).trace().real();
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                ref(i, j) += (m.drho[i] * e).trace().real() * (m.drho[j] * e).trace().real() / pk;
            }
        }
    }
    EXPECT_LT((classical_fisher(m, p) - ref).norm(), 1e-12);
}

TEST(povm, singular_information_and_cfi) {
    const StatisticalModel c = get_example("C").model;
    Povm trivial;
    trivial.dim = 4;
    trivial.elements = {CMatrix::Identity(4, 4)};
    const RMatrix f = classical_fisher(c, trivial);
    try {
        optimal_estimator(c, trivial, f);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularCfi);
    }
    // Outcome with negligible probability but a non-negligible derivative.
    const StatisticalModel b = get_example("B").model;
    const double eps = 1e-7;
    CVector v(3), u(3), w(3);
    v << eps, 0, 1;
    u << 1, 0, -eps;
    w << 0, 1, 0;
    Povm p;
    p.dim = 3;
    for (const CVector &x : {v.normalized(), u.normalized(), w}) {
        p.elements.push_back(x * x.adjoint());
    }
    EXPECT_THROW(classical_fisher(b, p), Error);
    try {
        classical_fisher(b, p);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularInformation);
    }
}

TEST(povm, estimator_is_locally_unbiased_and_efficient) {
    const CatalogEntry &c = get_example("C");
    const Povm p = *c.povm;
    const RMatrix f = classical_fisher(c.model, p);
    const EstimatorTable est = optimal_estimator(c.model, p, f);
    const UnbiasednessResiduals ur = unbiasedness_residuals(c.model, p, est);
    EXPECT_LT(ur.mean, 1e-12);
    EXPECT_LT(ur.derivative, 1e-12);
    EXPECT_LT((mse_matrix(c.model, p, est) - f.inverse()).norm(), 1e-12);
}

TEST(povm, naimark_truncation_and_merging) {
    const CatalogEntry &d = get_example("D");
    const Povm full = *d.povm;
    EXPECT_EQ(full.dim, 8);
    EXPECT_TRUE(validate_povm(full).ok);
    const Povm trunc = naimark_truncate(full, 6);
    EXPECT_EQ(trunc.dim, 6);
    EXPECT_TRUE(validate_povm(trunc).ok);
    const Povm merged = merge_null_outcomes(d.model, trunc);
    EXPECT_EQ(merged.outcomes(), 7);
    EXPECT_TRUE(validate_povm(merged).ok);
    const double a = trace_inverse(classical_fisher(d.model, trunc), 1e-12, ErrorCode::SingularCfi);
    const double b = trace_inverse(classical_fisher(d.model, merged), 1e-12, ErrorCode::SingularCfi);
    EXPECT_NEAR(a, 22.0 / 27.0, 1e-9);
    EXPECT_NEAR(b, 22.0 / 27.0, 1e-9);
    EXPECT_THROW(naimark_truncate(full, 9), Error);
}

TEST(povm, outcome_statistics_shapes) {
    const OutcomeStatistics st = outcome_statistics(get_example("A").model, computational_basis(4));
    EXPECT_EQ(st.probabilities.size(), 4);
    EXPECT_EQ(st.derivatives.rows(), 2);
    EXPECT_NEAR(st.probabilities.sum(), 1.0, 1e-15);
    EXPECT_LT(st.derivatives.rowwise().sum().norm(), 1e-15);
}
