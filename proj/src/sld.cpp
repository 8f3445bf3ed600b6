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

#include "qcrb/sld.h"

#include <algorithm>
#include <cmath>

namespace qcrb {

CMatrix ExtendedSld::assemble() const {
    const int r = rank(), k = kernel_dim(), e = ext_dim();
    const int n = r + k + e;
    CMatrix op = CMatrix::Zero(n, n);
    op.block(0, 0, r, r) = support;
    if (k > 0) {
        op.block(0, r, r, k) = support_kernel;
        op.block(r, 0, k, r) = support_kernel.adjoint();
        op.block(r, r, k, k) = kernel;
    }
    if (e > 0) {
        op.block(r, r + k, k, e) = kernel_ext;
        op.block(r + k, r, e, k) = kernel_ext.adjoint();
        op.block(r + k, r + k, e, e) = ext;
    }
    return op;
}

ExtendedSld ExtendedSld::from_assembled(const CMatrix &op, int r, int k) {
    const auto n = static_cast<int>(op.rows());
    if (op.cols() != n || r < 0 || k < 0 || r + k > n) {
        throw Error(ErrorCode::DimensionMismatch, "operator does not fit the block layout");
    }
    const int e = n - r - k;
    if (e > 0 && op.block(0, r + k, r, e).norm() > 1e-12) {
        throw Error(ErrorCode::DimensionMismatch, "support-extension block must vanish");
    }
    ExtendedSld s;
    s.support = op.block(0, 0, r, r);
    s.support_kernel = op.block(0, r, r, k);
    s.kernel = op.block(r, r, k, k);
    s.kernel_ext = op.block(r, r + k, k, e);
    s.ext = op.block(r + k, r + k, e, e);
    return s;
}

ExtendedSld ExtendedSld::with_extension(int e) const {
    ExtendedSld s = *this;
    const int k = kernel_dim();
    s.kernel = CMatrix::Zero(k, k);
    s.kernel_ext = CMatrix::Zero(k, e);
    s.ext = CMatrix::Zero(e, e);
    return s;
}

std::vector<ExtendedSld> compute_slds(const DecomposedModel &m) {
    const int r = m.rank(), k = m.kernel_dim();
    const RVector &c = m.space.support_eigenvalues;
    std::vector<ExtendedSld> out;
    for (int j = 0; j < m.canonical.num_params; ++j) {
        const CMatrix ss = m.support_block(j);
        const CMatrix sk = m.support_kernel_block(j);
        ExtendedSld l;
        l.support.resize(r, r);
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) {
                l.support(a, b) = 2.0 * ss(a, b) / (c(a) + c(b));
            }
        }
        l.support = hermitian_part(l.support);
        l.support_kernel.resize(r, k);
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < k; ++b) {
                l.support_kernel(a, b) = 2.0 * sk(a, b) / c(a);
            }
        }
        l.kernel = CMatrix::Zero(k, k);
        l.kernel_ext.resize(k, 0);
        l.ext.resize(0, 0);
        out.push_back(std::move(l));
    }
    return out;
}

double sld_equation_residual(const DecomposedModel &m, const ExtendedSld &sld, int j) {
    const int d = m.canonical.dim;
    const CMatrix l = sld.assemble().topLeftCorner(d, d);
    const CMatrix &s = m.canonical.rho;
    return (0.5 * (s * l + l * s) - m.canonical.drho.at(j)).norm();
}

RMatrix qfim(const DecomposedModel &m, const std::vector<ExtendedSld> &slds) {
    const auto n = static_cast<int>(slds.size());
    std::vector<CMatrix> ops;
    for (const auto &l : slds) {
        ops.push_back(l.assemble());
    }
    RMatrix j(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const auto dim = ops[a].rows();
            if (ops[b].rows() != dim) {
                throw Error(ErrorCode::DimensionMismatch, "SLDs live on different spaces");
            }
            CMatrix s = CMatrix::Zero(dim, dim);
            s.topLeftCorner(m.canonical.dim, m.canonical.dim) = m.canonical.rho;
            const CMatrix prod = ops[a] * ops[b] + ops[b] * ops[a];
            j(a, b) = j(b, a) = 0.5 * (s * prod).trace().real();
        }
    }
    return j;
}

double sldcrb(const RMatrix &j) { return trace_inverse(j, 1e-12, ErrorCode::SingularQfim); }

double BlockNorms::max() const { return std::max({ss, sk, kk, se, ke, ee}); }

CommutatorPair commutator_blocks(const ExtendedSld &a, const ExtendedSld &b, double tol) {
    if (a.rank() != b.rank() || a.kernel_dim() != b.kernel_dim() || a.ext_dim() != b.ext_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "SLDs use different block layouts");
    }
    const int r = a.rank(), k = a.kernel_dim(), e = a.ext_dim();
    CommutatorPair p;
    p.commutator = commutator(a.assemble(), b.assemble());
    const CMatrix &c = p.commutator;
    p.anti_hermiticity = (c + c.adjoint()).norm();
    p.norms.ss = c.block(0, 0, r, r).norm();
    p.norms.sk = c.block(0, r, r, k).norm();
    p.norms.kk = c.block(r, r, k, k).norm();
    p.norms.se = c.block(0, r + k, r, e).norm();
    p.norms.ke = c.block(r, r + k, k, e).norm();
    p.norms.ee = c.block(r + k, r + k, e, e).norm();
    p.ss_zero = p.norms.ss <= tol;
    p.sk_zero = p.norms.sk <= tol;
    p.kk_zero = p.norms.kk <= tol;
    p.se_zero = p.norms.se <= tol;
    p.ke_zero = p.norms.ke <= tol;
    p.ee_zero = p.norms.ee <= tol;
    return p;
}

CommutatorReport commutator_blocks(const std::vector<ExtendedSld> &slds, double tol) {
    CommutatorReport rep;
    rep.tol = tol;
    for (std::size_t i = 0; i < slds.size(); ++i) {
        for (std::size_t j = i + 1; j < slds.size(); ++j) {
            CommutatorPair p = commutator_blocks(slds[i], slds[j], tol);
            p.i = static_cast<int>(i);
            p.j = static_cast<int>(j);
            rep.pairs.push_back(std::move(p));
        }
    }
    return rep;
}

EqualityConditions equality_conditions(const DecomposedModel &m, const std::vector<ExtendedSld> &slds,
                                       double tol) {
    EqualityConditions eq;
    eq.tol = tol;
    const int d = m.canonical.dim;
    for (std::size_t i = 0; i < slds.size(); ++i) {
        for (std::size_t j = i + 1; j < slds.size(); ++j) {
            const CMatrix li = slds[i].with_extension(0).assemble().topLeftCorner(d, d);
            const CMatrix lj = slds[j].with_extension(0).assemble().topLeftCorner(d, d);
            const CMatrix prod = m.canonical.rho * commutator(li, lj);
            eq.trace_residual = std::max(eq.trace_residual, std::abs(prod.trace()));
            eq.trace_abs_residual = std::max(eq.trace_abs_residual, trace_abs(prod));
        }
    }
    eq.cs_eq_ch = eq.trace_residual <= tol;
    eq.cs_eq_cnh = eq.trace_abs_residual <= tol;
    return eq;
}

}  // namespace qcrb
