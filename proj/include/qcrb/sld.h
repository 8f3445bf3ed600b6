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

#ifndef QCRB_SLD_H
#define QCRB_SLD_H

#include <vector>

#include "qcrb/model.h"

namespace qcrb {

/// One symmetric logarithmic derivative in block form over
/// support (r) | kernel (k) | extension (e), in the canonical basis:
///
///     [ L^s     L^sk   0    ]
///     [ L^sk^†  L^k    L^ke ]
///     [ 0       L^ke^† L^e  ]
///
/// L^s and L^sk are fixed by the model; the other blocks are free.
struct ExtendedSld {
    CMatrix support;         // r x r
    CMatrix support_kernel;  // r x k
    CMatrix kernel;          // k x k
    CMatrix kernel_ext;      // k x e
    CMatrix ext;             // e x e

    int rank() const { return static_cast<int>(support.rows()); }
    int kernel_dim() const { return static_cast<int>(kernel.rows()); }
    int ext_dim() const { return static_cast<int>(ext.rows()); }
    int total_dim() const { return rank() + kernel_dim() + ext_dim(); }

    CMatrix assemble() const;

    /// Splits an assembled (r+k+e)-square operator; throws DimensionMismatch
    /// if the support-extension block is not zero within 1e-12.
    static ExtendedSld from_assembled(const CMatrix &op, int rank, int kernel_dim);

    /// Same fixed blocks, free blocks zeroed out to extension dimension e.
    ExtendedSld with_extension(int e) const;
};

/// SLDs with all free blocks zero and e = 0:
/// L^s_{nm} = 2 S^s_{nm} / (c_n + c_m), L^sk_{nm} = 2 S^sk_{nm} / c_n.
std::vector<ExtendedSld> compute_slds(const DecomposedModel &model);

/// || (S L + L S)/2 - S_j ||_F over the d x d physical block.
double sld_equation_residual(const DecomposedModel &model, const ExtendedSld &sld, int j);

/// J_ij = 1/2 tr{S (L_i L_j + L_j L_i)}.
RMatrix qfim(const DecomposedModel &model, const std::vector<ExtendedSld> &slds);

/// C_S = Tr J^-1; throws SingularQfim when min eig J <= 1e-12.
double sldcrb(const RMatrix &qfim);

struct BlockNorms {
    double ss = 0, sk = 0, kk = 0, se = 0, ke = 0, ee = 0;

    double max() const;
};

struct CommutatorPair {
    int i = 0;
    int j = 0;
    CMatrix commutator;
    BlockNorms norms;
    double anti_hermiticity = 0.0;
    bool ss_zero = true, sk_zero = true, kk_zero = true, se_zero = true, ke_zero = true,
         ee_zero = true;

    bool all_zero() const { return ss_zero && sk_zero && kk_zero && se_zero && ke_zero && ee_zero; }
};

struct CommutatorReport {
    double tol = 1e-9;
    std::vector<CommutatorPair> pairs;
};

/// Block-resolved [L_i, L_j] for one pair; flags use absolute tolerance `tol`
/// on Frobenius block norms.
CommutatorPair commutator_blocks(const ExtendedSld &a, const ExtendedSld &b, double tol = 1e-9);
CommutatorReport commutator_blocks(const std::vector<ExtendedSld> &slds, double tol = 1e-9);

/// Table-style criteria evaluated with the zero-free-block SLDs:
/// C_S = C_H iff tr{S[L_i,L_j]} = 0 and C_S = C_NH iff trAbs{S[L_i,L_j]} = 0,
/// with trAbs = sum |eig|. Residuals are maxima over pairs.
struct EqualityConditions {
    bool cs_eq_ch = false;
    bool cs_eq_cnh = false;
    double trace_residual = 0.0;
    double trace_abs_residual = 0.0;
    double tol = 1e-9;
};

EqualityConditions equality_conditions(const DecomposedModel &model,
                                       const std::vector<ExtendedSld> &slds, double tol = 1e-9);

}  // namespace qcrb

#endif
