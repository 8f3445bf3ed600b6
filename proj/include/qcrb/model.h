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

#ifndef QCRB_MODEL_H
#define QCRB_MODEL_H

#include <optional>
#include <string>
#include <vector>

#include "qcrb/linalg.h"

namespace qcrb {

/// A local quantum statistical model: the state and its parameter
/// derivatives at the true parameter point.
struct StatisticalModel {
    int dim = 0;
    int num_params = 0;
    CMatrix rho;
    std::vector<CMatrix> drho;
    std::string label;
};

struct ValidationCheck {
    std::string name;
    bool passed = true;
    double residual = 0.0;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationCheck> checks;

    /// First failing check, or nullptr.
    const ValidationCheck *first_failure() const;
    std::string summary() const;
};

/// Reports every violated model invariant; never throws.
ValidationReport validate(const StatisticalModel &model);

/// Support/kernel split of the state. Columns of `support_basis` are
/// eigenvectors ordered by descending eigenvalue; `kernel_basis` spans the
/// orthogonal complement.
struct SpaceDecomposition {
    int dim = 0;
    int rank = 0;
    RVector support_eigenvalues;
    CMatrix support_basis;
    CMatrix kernel_basis;
    double rank_tol = 0.0;
    // Eigenvalues in (0, rank_tol] that were assigned to the kernel.
    std::vector<double> truncated_eigenvalues;

    int kernel_dim() const { return dim - rank; }
    /// [support | kernel] as a d x d unitary; maps canonical to original coordinates.
    CMatrix basis() const;
};

/// The model re-expressed in the canonical basis, so that
/// rho = diag(c_1..c_r, 0..0) and every derivative has a zero kernel block.
struct DecomposedModel {
    SpaceDecomposition space;
    StatisticalModel canonical;

    int rank() const { return space.rank; }
    int kernel_dim() const { return space.kernel_dim(); }
    CMatrix support_block(int j) const;
    CMatrix support_kernel_block(int j) const;
};

/// Throws InvalidModel when validation fails and KernelDerivativeNonzero
/// when some derivative has a kernel-kernel block above 1e-9.
DecomposedModel canonical_decompose(const StatisticalModel &model,
                                    std::optional<double> rank_tol = std::nullopt);

/// (U rho U^dagger, U S_j U^dagger).
StatisticalModel transform(const StatisticalModel &model, const CMatrix &unitary);

/// Zero-pads the model into dim + extra dimensions.
StatisticalModel embed(const StatisticalModel &model, int extra);

}  // namespace qcrb

#endif
