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

#ifndef QCRB_OPTIMIZER_H
#define QCRB_OPTIMIZER_H

#include <cstdint>
#include <string>
#include <vector>

#include "qcrb/povm.h"

namespace qcrb {

enum class OptimizerMethod { Simplex, FdGradient };
const char *optimizer_method_name(OptimizerMethod m);
OptimizerMethod parse_optimizer_method(const std::string &s);

struct OptimizerConfig {
    int num_outcomes = 0;  // 0: d + 2
    int restarts = 32;
    std::uint64_t seed = 0;
    long max_evals = 0;  // per restart; 0: default_max_evals
    OptimizerMethod method = OptimizerMethod::Simplex;
    int threads = 0;
};

struct OptimizerResult {
    double best_value = 0.0;  // exact Tr F^-1 of best_povm
    Povm best_povm;
    std::vector<double> restart_values;             // final value per restart
    std::vector<std::vector<double>> restart_traces;  // non-increasing per restart
    double min_evaluated = 0.0;  // smallest penalized objective seen anywhere
    long evaluations = 0;
    int num_outcomes = 0;
    long max_evals = 0;
};

/// Per-restart evaluation budget used when max_evals = 0.
long default_max_evals(int num_outcomes, int dim);

/// Penalized objective sum_i 1/(lambda_i(F) + 1e-9) for the rank-1 POVM
/// Pi_k = w_k w_k^dagger, w_k = conj(row k) of the polar factor of `a`.
double povm_objective(const StatisticalModel &model, const CMatrix &a);

/// Rows of the orthonormal polar factor of `a` as rank-1 POVM elements.
Povm rank_one_povm(const CMatrix &a);

/// Direct search over M-outcome rank-1 POVMs for the smallest Tr F^-1.
/// Throws ConfigInvalid (M < n + 1, M < d, restarts < 1) and
/// NoFiniteObjective.
OptimizerResult optimize_povm(const StatisticalModel &model, const OptimizerConfig &config);

}  // namespace qcrb

#endif
