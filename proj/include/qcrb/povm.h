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

#ifndef QCRB_POVM_H
#define QCRB_POVM_H

#include <string>
#include <vector>

#include "qcrb/model.h"

namespace qcrb {

struct Povm {
    int dim = 0;
    std::vector<CMatrix> elements;

    int outcomes() const { return static_cast<int>(elements.size()); }
};

struct PovmReport {
    bool ok = true;
    double completeness_residual = 0.0;     // ||sum Pi_k - I||_F
    std::vector<double> min_eigenvalues;    // per element
    std::vector<double> hermiticity;        // per element
    bool projective = false;                // diagnostic only
    std::vector<std::string> problems;
};

PovmReport validate_povm(const Povm &povm);

/// p_k = tr{S Pi_k} and d_jk = tr{S_j Pi_k}.
struct OutcomeStatistics {
    RVector probabilities;  // M
    RMatrix derivatives;    // n x M
};

OutcomeStatistics outcome_statistics(const StatisticalModel &model, const Povm &povm);

constexpr double kNullProbability = 1e-12;

/// F_ij = sum over p_k > 1e-12 of d_ik d_jk / p_k. Throws SingularInformation
/// when an outcome with p_k <= 1e-12 still carries a derivative above 1e-9.
RMatrix classical_fisher(const StatisticalModel &model, const Povm &povm);

/// Estimates theta_hat_{j,k} per (parameter, outcome) around reference theta (locally 0).
struct EstimatorTable {
    RMatrix coefficients;  // n x M
    RVector reference;     // n
};

/// theta_hat_{j,k} = theta_j + sum_i [F^-1]_ji d_ik / p_k; null outcomes get theta_j.
/// Throws SingularCfi if F is not invertible.
EstimatorTable optimal_estimator(const StatisticalModel &model, const Povm &povm, const RMatrix &fisher);

/// V_ij = sum_k (theta_hat_ik - theta_i)(theta_hat_jk - theta_j) p_k.
RMatrix mse_matrix(const StatisticalModel &model, const Povm &povm, const EstimatorTable &est);

/// Max residuals of sum_k theta_hat_jk p_k = theta_j and
/// sum_k theta_hat_jk tr{S_i Pi_k} = delta_ij.
struct UnbiasednessResiduals {
    double mean = 0.0;
    double derivative = 0.0;
};

UnbiasednessResiduals unbiasedness_residuals(const StatisticalModel &model, const Povm &povm,
                                             const EstimatorTable &est);

/// Leading d x d block of every element.
Povm naimark_truncate(const Povm &povm, int dim);

/// Combines all outcomes with p_k < threshold into a single trailing null
/// element (dropped when it would be exactly zero).
Povm merge_null_outcomes(const StatisticalModel &model, const Povm &povm,
                         double threshold = kNullProbability);

}  // namespace qcrb

#endif
