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

#ifndef QCRB_EXTENSION_H
#define QCRB_EXTENSION_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcrb/povm.h"
#include "qcrb/sld.h"

namespace qcrb {

enum class Classification { Attainable, CertifiedUnattainable, Undetermined };
const char *classification_name(Classification c);

enum class CertificateKind { SupportBlockNonzero, KernelLinearSystemInfeasible, Theorem1ConditionFailed };
const char *certificate_name(CertificateKind k);

/// The three one-dimensional-kernel conditions: i[L1^s, L2^s] has rank 2 (and
/// cancels the |l1><l2| - |l2><l1| term on the support), Im<l1|l2> = 0, and
/// L1^s|l2> - L2^s|l1> lies in the (real) span of |l1>, |l2>.
enum class Theorem1Condition { CommutatorRank, ImaginaryOverlap, SpanMembership };
const char *theorem1_condition_name(Theorem1Condition c);

struct Certificate {
    CertificateKind kind = CertificateKind::SupportBlockNonzero;
    double residual = 0.0;
    std::optional<Theorem1Condition> condition;
    std::string detail;
};

/// Free-block choice making every pair of extended SLDs commute.
struct Witness {
    std::vector<ExtendedSld> slds;
    double commutator_norm = 0.0;

    int ext_dim() const { return slds.empty() ? 0 : slds.front().ext_dim(); }
};

struct SearchSummary {
    int restarts = 0;
    int max_iters = 0;
    std::uint64_t seed = 0;
    double best_residual = 0.0;
    std::vector<int> ext_dims_tried;
    std::vector<double> best_residual_per_dim;
    long iterations = 0;
    std::string stage;
};

struct Theorem1Diagnostics {
    double support_commutator_residual = 0.0;  // ||[L1^s,L2^s] + |l1><l2| - |l2><l1|||
    int commutator_rank = 0;
    double imaginary_overlap = 0.0;
    double span_residual = 0.0;
    double k1 = 0.0, k2 = 0.0;
};

struct AttainabilityResult {
    Classification classification = Classification::Undetermined;
    std::optional<Witness> witness;
    std::optional<Certificate> certificate;
    std::optional<SearchSummary> summary;
    std::optional<Theorem1Diagnostics> theorem1;
};

/// Maximum over pairs of ||[L_i, L_j]||_F on the assembled operators.
double max_commutator_norm(const std::vector<ExtendedSld> &slds);

/// Closed-form decision for two parameters with a one-dimensional kernel.
/// Throws NotApplicable if kernel dim != 1, n != 2, some |l_j> = 0, or
/// |l1> and |l2> are parallel.
AttainabilityResult check_theorem1(const DecomposedModel &model, const std::vector<ExtendedSld> &slds);

struct KernelBlockSolution {
    std::vector<CMatrix> particular;                  // minimum-norm L_j^k
    std::vector<std::vector<CMatrix>> homogeneous;    // orthonormal directions (per-SLD kernel blocks)
    double residual = 0.0;
};

struct KernelBlockResult {
    std::optional<KernelBlockSolution> solution;
    std::optional<Certificate> certificate;
};

/// Kernel blocks L_j^k making every support-kernel commutator block vanish:
/// C0_ij + L_i^sk L_j^k - L_j^sk L_i^k = 0 with C0_ij = L_i^s L_j^sk - L_j^s L_i^sk.
/// The block does not depend on L^ke or L^e, so infeasibility is a certificate.
KernelBlockResult solve_kernel_block(const std::vector<ExtendedSld> &slds);

struct SearchConfig {
    int e_max = -1;  // -1: model dimension
    int restarts = 32;
    std::uint64_t seed = 0;
    int max_iters = 2000;
    bool nonlinear = true;
    int threads = 0;  // 0: QCRB_THREADS or hardware concurrency
};

/// Staged search: support-block certificate, kernel linear system, then a
/// seeded nonlinear least-squares search over free blocks for e = 0..e_max.
/// Throws ConfigInvalid for e_max < 0 (after defaulting) or restarts < 1.
AttainabilityResult search_witness(const DecomposedModel &model, const SearchConfig &config = {});

/// Rank-1 projectors onto a joint eigenbasis of the commuting witness,
/// truncated to the physical space and rotated back to the original basis.
/// Outcomes with probability below 1e-12 are merged into one null element.
Povm witness_to_povm(const Witness &witness, const DecomposedModel &model, std::uint64_t seed = 0);

/// Unitary whose columns jointly diagonalize commuting Hermitian operators
/// within `tol`; random combinations first, Jacobi sweeps as fallback.
CMatrix joint_eigenbasis(const std::vector<CMatrix> &ops, std::uint64_t seed, double tol = 1e-8);

/// Jacobi joint diagonalization of Hermitian matrices (approximately commuting is fine).
CMatrix jacobi_joint_diagonalize(const std::vector<CMatrix> &ops, int max_sweeps = 100, double tol = 1e-14);

}  // namespace qcrb

#endif
