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

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "qcrb/extension.h"

namespace qcrb {

namespace {

double off_diagonal_norm(const std::vector<CMatrix> &ops, const CMatrix &u) {
    double worst = 0.0;
    for (const auto &a : ops) {
        CMatrix t = u.adjoint() * a * u;
        t.diagonal().setZero();
        worst = std::max(worst, t.norm() / tolerance_scale(a));
    }
    return worst;
}

}  // namespace

CMatrix jacobi_joint_diagonalize(const std::vector<CMatrix> &ops, int max_sweeps, double tol) {
    if (ops.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "no operators");
    }
    const Eigen::Index m = ops.front().rows();
    std::vector<CMatrix> a = ops;
    CMatrix v = CMatrix::Identity(m, m);
    const Complex i1(0.0, 1.0);
    Eigen::Matrix3cd b;
    b << 1, 0, 0, 0, 1, 1, 0, -i1, i1;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (Eigen::Index p = 0; p + 1 < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                Eigen::Matrix3cd gg = Eigen::Matrix3cd::Zero();
                for (const auto &x : a) {
                    Eigen::Vector3cd g(x(p, p) - x(q, q), x(p, q), x(q, p));
                    gg += g * g.adjoint();
                }
                const Eigen::Matrix3d re = (b * gg * b.adjoint()).real();
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(re);
                Eigen::Vector3d ang = es.eigenvectors().col(2);
                if (ang(0) < 0.0) {
                    ang = -ang;
                }
                const double c = std::sqrt(0.5 + ang(0) / 2.0);
                const Complex s = 0.5 * Complex(ang(1), -ang(2)) / c;
                if (std::abs(s) <= tol) {
                    continue;
                }
                rotated = true;
                Eigen::Matrix2cd g;
                g << c, -std::conj(s), s, c;
                for (auto &x : a) {
                    Eigen::Matrix<Complex, 2, Eigen::Dynamic> rows(2, m);
                    rows.row(0) = x.row(p);
                    rows.row(1) = x.row(q);
                    rows = g.adjoint() * rows;
                    x.row(p) = rows.row(0);
                    x.row(q) = rows.row(1);
                    const CVector cp = x.col(p);
                    const CVector cq = x.col(q);
                    x.col(p) = c * cp + s * cq;
                    x.col(q) = -std::conj(s) * cp + c * cq;
                }
                const CVector vp = v.col(p);
                const CVector vq = v.col(q);
                v.col(p) = c * vp + s * vq;
                v.col(q) = -std::conj(s) * vp + c * vq;
            }
        }
        if (!rotated) {
            break;
        }
    }
    return v;
}

CMatrix joint_eigenbasis(const std::vector<CMatrix> &ops, std::uint64_t seed, double tol) {
    if (ops.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "no operators");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(0.5, 1.5);
    for (int attempt = 0; attempt < 9; ++attempt) {
        CMatrix mix = CMatrix::Zero(ops.front().rows(), ops.front().cols());
        for (const auto &a : ops) {
            mix += coef(rng) * a;
        }
        const CMatrix u = eig_hermitian(hermitian_part(mix)).vectors;
        if (off_diagonal_norm(ops, u) <= tol) {
            return u;
        }
    }
    const CMatrix u = jacobi_joint_diagonalize(ops);
    const double off = off_diagonal_norm(ops, u);
    if (off > tol) {
        throw Error(ErrorCode::JointDiagonalizationFailed,
                    "residual off-diagonal norm " + std::to_string(off));
    }
    return u;
}

}  // namespace qcrb
