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

#include <gtest/gtest.h>

#include "qcrb/catalog.h"
#include "qcrb/optimizer.h"

using namespace qcrb;

namespace {

StatisticalModel z_qubit() {
    StatisticalModel m;
    m.dim = 2;
    m.num_params = 1;
    m.rho = CMatrix::Identity(2, 2) / 2.0;
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 0.5;
    z(1, 1) = -0.5;
    m.drho = {z};
    m.label = "qubit";
    return m;
}

}  // namespace

TEST(optimizer, single_parameter_qubit_reaches_bound) {
    OptimizerConfig cfg;
    cfg.restarts = 4;
    const OptimizerResult r = optimize_povm(z_qubit(), cfg);
    EXPECT_NEAR(r.best_value, 1.0, 1e-6);
    EXPECT_TRUE(validate_povm(r.best_povm).ok);
}

TEST(optimizer, example_b_reaches_bound) {
    OptimizerConfig cfg;
    cfg.num_outcomes = 4;
    cfg.restarts = 4;
    const OptimizerResult r = optimize_povm(get_example("B").model, cfg);
    EXPECT_NEAR(r.best_value, 1.0, 1e-5);
    EXPECT_GE(r.min_evaluated, 1.0 - 1e-6);
}

TEST(optimizer, gradient_method_also_converges) {
    OptimizerConfig cfg;
    cfg.num_outcomes = 4;
    cfg.restarts = 2;
    cfg.method = OptimizerMethod::FdGradient;
    const OptimizerResult r = optimize_povm(get_example("B").model, cfg);
    EXPECT_NEAR(r.best_value, 1.0, 1e-5);
}

TEST(optimizer, deterministic_and_monotone) {
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.max_evals = 3000;
    cfg.threads = 1;
    const StatisticalModel a = get_example("A").model;
    const OptimizerResult x = optimize_povm(a, cfg);
    cfg.threads = 3;
    const OptimizerResult y = optimize_povm(a, cfg);
    EXPECT_EQ(x.best_value, y.best_value);
    EXPECT_EQ(x.restart_values, y.restart_values);
    for (const auto &trace : x.restart_traces) {
        EXPECT_TRUE(std::is_sorted(trace.rbegin(), trace.rend()));
    }
    EXPECT_EQ(x.evaluations, 3L * 3000);
}

TEST(optimizer, config_errors) {
    const StatisticalModel a = get_example("A").model;
    OptimizerConfig cfg;
    cfg.num_outcomes = 1;
    try {
        optimize_povm(a, cfg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ConfigInvalid);
    }
    cfg = {};
    cfg.restarts = 0;
    EXPECT_THROW(optimize_povm(a, cfg), Error);
    EXPECT_THROW(parse_optimizer_method("annealing"), Error);
}

TEST(optimizer, rank_one_parameterization_is_complete) {
    std::mt19937_64 rng(61);
    const Povm p = rank_one_povm(random_complex(rng, 7, 4));
    EXPECT_EQ(p.outcomes(), 7);
    const PovmReport rep = validate_povm(p);
    EXPECT_TRUE(rep.ok);
    EXPECT_LT(rep.completeness_residual, 1e-9);
}
