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

#ifndef QCRB_NELDER_MEAD_H
#define QCRB_NELDER_MEAD_H

#include <functional>
#include <vector>

#include "qcrb/linalg.h"

namespace qcrb {

using Objective = std::function<double(const RVector &)>;

struct MinimizeOptions {
    long max_evals = 10000;
    double initial_step = 0.25;
    double ftol = 1e-13;
    int trace_every = 0;  // record best value every N evaluations (0: never)
};

struct MinimizeResult {
    RVector x;
    double value = 0.0;
    long evaluations = 0;
    std::vector<double> trace;  // non-increasing
};

/// Adaptive Nelder-Mead (dimension-dependent coefficients). The simplex is
/// rebuilt around the best vertex whenever it collapses, until the budget
/// is spent.
MinimizeResult nelder_mead(const Objective &f, RVector x0, const MinimizeOptions &opt);

/// BFGS with central finite-difference gradients and backtracking line search.
MinimizeResult fd_bfgs(const Objective &f, RVector x0, const MinimizeOptions &opt, double fd_step = 1e-6);

}  // namespace qcrb

#endif
