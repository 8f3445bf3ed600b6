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

#ifndef QCRB_LINALG_H
#define QCRB_LINALG_H

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "qcrb/error.h"

namespace qcrb {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// max(1, ||m||_F); the reference scale for relative tolerances.
double tolerance_scale(const CMatrix &m);
double tolerance_scale(const RMatrix &m);

bool all_finite(const CMatrix &m);

/// ||M - M^dagger||_F.
double hermiticity_residual(const CMatrix &m);
bool is_hermitian(const CMatrix &m, double rel_tol = 1e-12);

CMatrix hermitian_part(const CMatrix &m);
CMatrix commutator(const CMatrix &a, const CMatrix &b);

struct HermitianEigen {
    RVector values;   // ascending
    CMatrix vectors;  // columns, unitary
};

/// Throws NonHermitianInput when M is not Hermitian within 1e-12 relative.
HermitianEigen eig_hermitian(const CMatrix &m);

RVector eigenvalues_hermitian(const CMatrix &m);
double min_eigenvalue(const CMatrix &m);
double min_eigenvalue(const RMatrix &m);

/// Eigenvalues of a general square matrix. Rows and columns that are
/// exactly zero off the diagonal are deflated first, the remaining core goes
/// through a complex Schur iteration with a hard iteration cap (EigFailure).
CVector eigenvalues_general(const CMatrix &m);

/// Sum of |eigenvalues| of a square matrix (trAbs = sum |eig|).
double trace_abs(const CMatrix &m);

/// True iff min eig(B - A) >= -tol. Throws DimensionMismatch.
bool psd_order(const CMatrix &a, const CMatrix &b, double tol);

/// Trace of the inverse of a symmetric positive definite matrix. Throws
/// `code` when the minimum eigenvalue is <= min_eig.
double trace_inverse(const RMatrix &m, double min_eig, ErrorCode code);
RMatrix symmetric_inverse(const RMatrix &m, double min_eig, ErrorCode code);

/// Real symmetric part; drops the imaginary part of a numerically real matrix.
RMatrix real_symmetric(const CMatrix &m);

CMatrix random_unitary(std::mt19937_64 &rng, int dim);
CMatrix random_hermitian(std::mt19937_64 &rng, int dim, double scale = 1.0);
CMatrix random_complex(std::mt19937_64 &rng, int rows, int cols, double scale = 1.0);

}  // namespace qcrb

#endif
