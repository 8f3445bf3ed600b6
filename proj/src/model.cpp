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

#include "qcrb/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcrb {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kIndependenceTol = 1e-10;
constexpr double kKernelBlockTol = 1e-9;
constexpr double kClusterTol = 1e-8;

void add(ValidationReport &report, std::string name, bool passed, double residual,
         std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, residual, std::move(detail)});
    report.ok = report.ok && passed;
}

// Orthonormal basis of range(P) by pivoted Gram-Schmidt on the columns
// P e_0, P e_1, ...; near-ties go to the lowest index so the basis within a
// degenerate eigenspace is reproducible (and is e_i when P is diagonal).
CMatrix ordered_range_basis(const CMatrix &projector, int count) {
    const auto d = projector.rows();
    CMatrix residual = projector;
    CMatrix basis(d, count);
    for (int found = 0; found < count; ++found) {
        double best = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            best = std::max(best, residual.col(i).norm());
        }
        if (best < 1e-8) {
            throw Error(ErrorCode::EigFailure, "could not span an eigenspace from coordinate vectors");
        }
        Eigen::Index pick = 0;
        while (residual.col(pick).norm() < best * (1.0 - 1e-6)) {
            ++pick;
        }
        CVector v = residual.col(pick);
        for (int b = 0; b < found; ++b) {
            v -= basis.col(b) * basis.col(b).dot(v);
        }
        v /= v.norm();
        basis.col(found) = v;
        residual -= v * (v.adjoint() * residual);
    }
    return basis;
}

}  // namespace

const ValidationCheck *ValidationReport::first_failure() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return &c;
        }
    }
    return nullptr;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &c : checks) {
        if (!c.passed) {
            os << (first ? "" : "; ") << c.name << " (residual " << c.residual << ")";
            if (!c.detail.empty()) {
                os << ": " << c.detail;
            }
            first = false;
        }
    }
    return first ? "ok" : os.str();
}

ValidationReport validate(const StatisticalModel &m) {
    ValidationReport r;
    const bool dims_ok = m.dim >= 1 && m.rho.rows() == m.dim && m.rho.cols() == m.dim &&
                         static_cast<int>(m.drho.size()) == m.num_params && m.num_params >= 1 &&
                         std::all_of(m.drho.begin(), m.drho.end(), [&](const CMatrix &s) {
                             return s.rows() == m.dim && s.cols() == m.dim;
                         });
    add(r, "dimensions", dims_ok, 0.0,
        dims_ok ? "" : "rho must be dim x dim and drho must hold num_params dim x dim matrices");
    if (!dims_ok) {
        return r;
    }
    bool finite = all_finite(m.rho);
    for (const auto &s : m.drho) {
        finite = finite && all_finite(s);
    }
    add(r, "finite", finite, 0.0);
    if (!finite) {
        return r;
    }

    const double herm = hermiticity_residual(m.rho);
    add(r, "rho_hermitian", herm <= 1e-12 * tolerance_scale(m.rho), herm);
    const double tr = std::abs(m.rho.trace() - Complex(1.0, 0.0));
    add(r, "rho_trace", tr <= kTraceTol, tr);
    const double min_ev = min_eigenvalue(CMatrix(hermitian_part(m.rho)));
    add(r, "rho_psd", min_ev >= -kPsdTol, std::max(0.0, -min_ev));

    for (int j = 0; j < m.num_params; ++j) {
        const auto &s = m.drho[j];
        const double h = hermiticity_residual(s);
        add(r, "drho_hermitian[" + std::to_string(j) + "]", h <= 1e-12 * tolerance_scale(s), h);
        const double t = std::abs(s.trace());
        add(r, "drho_traceless[" + std::to_string(j) + "]", t <= kTraceTol, t);
    }

    RMatrix gram(m.num_params, m.num_params);
    for (int i = 0; i < m.num_params; ++i) {
        for (int j = 0; j < m.num_params; ++j) {
            gram(i, j) = (m.drho[i].adjoint() * m.drho[j]).trace().real();
        }
    }
    const double gmin = min_eigenvalue(gram);
    add(r, "drho_linearly_independent", gmin > kIndependenceTol, gmin,
        gmin > kIndependenceTol ? "" : "Gram matrix of derivatives is singular");
    return r;
}

CMatrix SpaceDecomposition::basis() const {
    CMatrix u(dim, dim);
    if (rank > 0) {
        u.leftCols(rank) = support_basis;
    }
    if (kernel_dim() > 0) {
        u.rightCols(kernel_dim()) = kernel_basis;
    }
    return u;
}

CMatrix DecomposedModel::support_block(int j) const {
    return canonical.drho.at(j).topLeftCorner(rank(), rank());
}

CMatrix DecomposedModel::support_kernel_block(int j) const {
    return canonical.drho.at(j).topRightCorner(rank(), kernel_dim());
}

DecomposedModel canonical_decompose(const StatisticalModel &model, std::optional<double> rank_tol) {
    const ValidationReport report = validate(model);
    if (!report.ok) {
        throw Error(ErrorCode::InvalidModel, report.summary());
    }
    const int d = model.dim;
    const HermitianEigen eig = eig_hermitian(hermitian_part(model.rho));
    const double largest = eig.values(d - 1);
    const double tol = rank_tol.value_or(1e-10 * largest);

    SpaceDecomposition sp;
    sp.dim = d;
    sp.rank_tol = tol;

    // Support eigenvalues in descending order, grouped into clusters.
    std::vector<int> support_idx;
    for (int i = d - 1; i >= 0; --i) {
        if (eig.values(i) > tol) {
            support_idx.push_back(i);
        } else if (eig.values(i) > 0.0) {
            sp.truncated_eigenvalues.push_back(eig.values(i));
        }
    }
    sp.rank = static_cast<int>(support_idx.size());
    sp.support_eigenvalues.resize(sp.rank);
    sp.support_basis.resize(d, sp.rank);

    int col = 0;
    for (std::size_t a = 0; a < support_idx.size();) {
        std::size_t b = a + 1;
        const double lead = eig.values(support_idx[a]);
        while (b < support_idx.size() &&
               lead - eig.values(support_idx[b]) <= kClusterTol * std::max(1.0, lead)) {
            ++b;
        }
        CMatrix proj = CMatrix::Zero(d, d);
        for (std::size_t c = a; c < b; ++c) {
            proj += eig.vectors.col(support_idx[c]) * eig.vectors.col(support_idx[c]).adjoint();
        }
        const int count = static_cast<int>(b - a);
        sp.support_basis.middleCols(col, count) = ordered_range_basis(proj, count);
        for (std::size_t c = a; c < b; ++c) {
            sp.support_eigenvalues(col + static_cast<int>(c - a)) = eig.values(support_idx[c]);
        }
        col += count;
        a = b;
    }

    const int k = d - sp.rank;
    if (k > 0) {
        CMatrix proj = CMatrix::Identity(d, d);
        if (sp.rank > 0) {
            proj -= sp.support_basis * sp.support_basis.adjoint();
        }
        sp.kernel_basis = ordered_range_basis(proj, k);
    } else {
        sp.kernel_basis.resize(d, 0);
    }

    const CMatrix u = sp.basis();
    DecomposedModel out;
    out.canonical.dim = d;
    out.canonical.num_params = model.num_params;
    out.canonical.label = model.label;
    out.canonical.rho = CMatrix::Zero(d, d);
    for (int i = 0; i < sp.rank; ++i) {
        out.canonical.rho(i, i) = sp.support_eigenvalues(i);
    }
    for (int j = 0; j < model.num_params; ++j) {
        CMatrix s = hermitian_part(u.adjoint() * model.drho[j] * u);
        if (k > 0) {
            const double kk = s.bottomRightCorner(k, k).norm();
            if (kk > kKernelBlockTol) {
                throw Error(ErrorCode::KernelDerivativeNonzero,
                            "derivative " + std::to_string(j) + " has kernel block norm " +
                                std::to_string(kk));
            }
            s.bottomRightCorner(k, k).setZero();
        }
        out.canonical.drho.push_back(std::move(s));
    }
    out.space = std::move(sp);
    return out;
}

StatisticalModel transform(const StatisticalModel &model, const CMatrix &unitary) {
    StatisticalModel out = model;
    out.rho = hermitian_part(unitary * model.rho * unitary.adjoint());
    for (auto &s : out.drho) {
        s = hermitian_part(unitary * s * unitary.adjoint());
    }
    return out;
}

StatisticalModel embed(const StatisticalModel &model, int extra) {
    if (extra < 0) {
        throw Error(ErrorCode::DimensionMismatch, "negative embedding");
    }
    StatisticalModel out = model;
    const int n = model.dim + extra;
    out.dim = n;
    out.rho = CMatrix::Zero(n, n);
    out.rho.topLeftCorner(model.dim, model.dim) = model.rho;
    for (std::size_t j = 0; j < model.drho.size(); ++j) {
        out.drho[j] = CMatrix::Zero(n, n);
        out.drho[j].topLeftCorner(model.dim, model.dim) = model.drho[j];
    }
    return out;
}

}  // namespace qcrb
