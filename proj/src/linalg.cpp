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

#include "qcrb/linalg.h"

#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qcrb {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianInput: return "NonHermitianInput";
        case ErrorCode::EigFailure: return "EigFailure";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidModel: return "InvalidModel";
        case ErrorCode::KernelDerivativeNonzero: return "KernelDerivativeNonzero";
        case ErrorCode::SingularQfim: return "SingularQfim";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::JointDiagonalizationFailed: return "JointDiagonalizationFailed";
        case ErrorCode::SingularInformation: return "SingularInformation";
        case ErrorCode::SingularCfi: return "SingularCfi";
        case ErrorCode::NoFiniteObjective: return "NoFiniteObjective";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::NonCommutingGenerators: return "NonCommutingGenerators";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

double tolerance_scale(const CMatrix &m) { return std::max(1.0, m.norm()); }
double tolerance_scale(const RMatrix &m) { return std::max(1.0, m.norm()); }

bool all_finite(const CMatrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) {
            return false;
        }
    }
    return true;
}

double hermiticity_residual(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m - m.adjoint()).norm();
}

bool is_hermitian(const CMatrix &m, double rel_tol) {
    return m.rows() == m.cols() && hermiticity_residual(m) <= rel_tol * tolerance_scale(m);
}

CMatrix hermitian_part(const CMatrix &m) { return 0.5 * (m + m.adjoint()); }

CMatrix commutator(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "commutator operands must be square and equal-sized");
    }
    return a * b - b * a;
}

HermitianEigen eig_hermitian(const CMatrix &m) {
    if (!is_hermitian(m)) {
        throw Error(ErrorCode::NonHermitianInput,
                    "hermiticity residual " + std::to_string(hermiticity_residual(m)));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m));
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigFailure, "Hermitian eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RVector eigenvalues_hermitian(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigFailure, "Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double min_eigenvalue(const CMatrix &m) { return eigenvalues_hermitian(m)(0); }

double min_eigenvalue(const RMatrix &m) {
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigFailure, "symmetric eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

CVector eigenvalues_general(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "eigenvalues of a non-square matrix");
    }
    if (!all_finite(m)) {
        throw Error(ErrorCode::EigFailure, "non-finite entries");
    }
    const auto n = static_cast<int>(m.rows());
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    std::vector<Complex> isolated;

    auto off_diagonal_zero = [&](int i, bool row) {
        for (int j : active) {
            if (j != i && (row ? m(i, j) : m(j, i)) != Complex(0.0, 0.0)) {
                return false;
            }
        }
        return true;
    };

    bool changed = true;
    while (changed && !active.empty()) {
        changed = false;
        for (std::size_t a = 0; a < active.size(); ++a) {
            const int i = active[a];
            if (off_diagonal_zero(i, true) || off_diagonal_zero(i, false)) {
                isolated.push_back(m(i, i));
                active.erase(active.begin() + static_cast<std::ptrdiff_t>(a));
                changed = true;
                break;
            }
        }
    }

    CVector out(n);
    Eigen::Index pos = 0;
    for (const auto &v : isolated) {
        out(pos++) = v;
    }
    if (!active.empty()) {
        const auto k = static_cast<Eigen::Index>(active.size());
        CMatrix core(k, k);
        for (Eigen::Index a = 0; a < k; ++a) {
            for (Eigen::Index b = 0; b < k; ++b) {
                core(a, b) = m(active[a], active[b]);
            }
        }
        Eigen::ComplexSchur<CMatrix> schur;
        schur.setMaxIterations(40 * k);
        schur.compute(core, false);
        if (schur.info() != Eigen::Success) {
            throw Error(ErrorCode::EigFailure, "Schur iteration hit its iteration cap");
        }
        for (Eigen::Index a = 0; a < k; ++a) {
            out(pos++) = schur.matrixT()(a, a);
        }
    }
    return out;
}

double trace_abs(const CMatrix &m) {
    const CVector ev = eigenvalues_general(m);
    double total = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        total += std::abs(ev(i));
    }
    return total;
}

bool psd_order(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "psd_order operands differ in shape");
    }
    return min_eigenvalue(CMatrix(b - a)) >= -tol;
}

RMatrix symmetric_inverse(const RMatrix &m, double min_eig, ErrorCode code) {
    const RMatrix sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigFailure, "symmetric eigensolver did not converge");
    }
    const RVector &ev = solver.eigenvalues();
    if (ev.size() == 0 || !(ev(0) > min_eig)) {
        throw Error(code, "minimum eigenvalue " + std::to_string(ev.size() ? ev(0) : 0.0) +
                              " is not above " + std::to_string(min_eig));
    }
    const RMatrix &u = solver.eigenvectors();
    return u * ev.cwiseInverse().asDiagonal() * u.transpose();
}

double trace_inverse(const RMatrix &m, double min_eig, ErrorCode code) {
    return symmetric_inverse(m, min_eig, code).trace();
}

RMatrix real_symmetric(const CMatrix &m) {
    const RMatrix re = m.real();
    return 0.5 * (re + re.transpose());
}

CMatrix random_complex(std::mt19937_64 &rng, int rows, int cols, double scale) {
    std::normal_distribution<double> normal(0.0, scale);
    CMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            out(i, j) = Complex(re, im);
        }
    }
    return out;
}

CMatrix random_hermitian(std::mt19937_64 &rng, int dim, double scale) {
    const CMatrix g = random_complex(rng, dim, dim, scale);
    return hermitian_part(g);
}

// Haar-distributed via QR of a Ginibre matrix with phase correction.
CMatrix random_unitary(std::mt19937_64 &rng, int dim) {
    const CMatrix g = random_complex(rng, dim, dim);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

}  // namespace qcrb
