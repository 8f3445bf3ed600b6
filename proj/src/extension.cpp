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

#include "qcrb/extension.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SVD>

#include "qcrb/parallel.h"

namespace qcrb {

namespace {

constexpr double kBlockTol = 1e-9;
constexpr double kLinearResidualTol = 1e-8;
constexpr double kWitnessTol = 1e-8;
constexpr double kStopResidual = 1e-11;

// Hermitian k x k basis: diagonal units, then (re, im) pairs for a < b.
std::vector<CMatrix> hermitian_basis(int k) {
    std::vector<CMatrix> out;
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            if (a == b) {
                CMatrix h = CMatrix::Zero(k, k);
                h(a, a) = 1.0;
                out.push_back(h);
            } else {
                CMatrix re = CMatrix::Zero(k, k);
                re(a, b) = re(b, a) = 1.0;
                out.push_back(re);
                CMatrix im = CMatrix::Zero(k, k);
                im(a, b) = Complex(0.0, 1.0);
                im(b, a) = Complex(0.0, -1.0);
                out.push_back(im);
            }
        }
    }
    return out;
}

double support_block_norm(const std::vector<ExtendedSld> &slds) {
    double worst = 0.0;
    for (std::size_t i = 0; i < slds.size(); ++i) {
        for (std::size_t j = i + 1; j < slds.size(); ++j) {
            const auto &a = slds[i];
            const auto &b = slds[j];
            const CMatrix ss = a.support * b.support - b.support * a.support +
                               a.support_kernel * b.support_kernel.adjoint() -
                               b.support_kernel * a.support_kernel.adjoint();
            worst = std::max(worst, ss.norm());
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Free-block least squares.

struct SparseEntry {
    int sld;
    int row;
    int col;
    Complex value;
};

using Direction = std::vector<SparseEntry>;

void push_hermitian_pair(Direction &dir, int sld, int row, int col, Complex value) {
    dir.push_back({sld, row, col, value});
    if (row != col) {
        dir.push_back({sld, col, row, std::conj(value)});
    }
}

class FreeBlockProblem {
   public:
    FreeBlockProblem(const std::vector<ExtendedSld> &base, const KernelBlockSolution &kernel, int e)
        : rank_(base.front().rank()), kdim_(base.front().kernel_dim()), edim_(e) {
        dim_ = rank_ + kdim_ + edim_;
        for (const auto &l : base) {
            base_.push_back(l.with_extension(e));
            base_.back().kernel = l.kernel;
        }
        for (auto &l : base_) {
            ops0_.push_back(l.assemble());
        }
        const int n = static_cast<int>(base_.size());
        for (const auto &h : kernel.homogeneous) {
            Direction dir;
            for (int j = 0; j < n; ++j) {
                for (int a = 0; a < kdim_; ++a) {
                    for (int b = 0; b < kdim_; ++b) {
                        if (std::abs(h[j](a, b)) > 0.0) {
                            dir.push_back({j, rank_ + a, rank_ + b, h[j](a, b)});
                        }
                    }
                }
            }
            dirs_.push_back(std::move(dir));
        }
        const int d = rank_ + kdim_;
        for (int j = 0; j < n; ++j) {
            for (int a = 0; a < kdim_; ++a) {
                for (int b = 0; b < edim_; ++b) {
                    Direction re, im;
                    push_hermitian_pair(re, j, rank_ + a, d + b, 1.0);
                    push_hermitian_pair(im, j, rank_ + a, d + b, Complex(0.0, 1.0));
                    dirs_.push_back(std::move(re));
                    dirs_.push_back(std::move(im));
                }
            }
            for (int a = 0; a < edim_; ++a) {
                for (int b = a; b < edim_; ++b) {
                    if (a == b) {
                        Direction diag;
                        push_hermitian_pair(diag, j, d + a, d + a, 1.0);
                        dirs_.push_back(std::move(diag));
                    } else {
                        Direction re, im;
                        push_hermitian_pair(re, j, d + a, d + b, 1.0);
                        push_hermitian_pair(im, j, d + a, d + b, Complex(0.0, 1.0));
                        dirs_.push_back(std::move(re));
                        dirs_.push_back(std::move(im));
                    }
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                pairs_.emplace_back(i, j);
            }
        }
    }

    int num_params() const { return static_cast<int>(dirs_.size()); }
    int num_residuals() const { return static_cast<int>(pairs_.size()) * dim_ * dim_; }

    std::vector<CMatrix> operators(const RVector &x) const {
        std::vector<CMatrix> ops = ops0_;
        for (int p = 0; p < num_params(); ++p) {
            if (x(p) == 0.0) {
                continue;
            }
            for (const auto &en : dirs_[p]) {
                ops[en.sld](en.row, en.col) += x(p) * en.value;
            }
        }
        return ops;
    }

    // Residual layout per pair: Im C_pp, then sqrt2 Re C_pq, sqrt2 Im C_pq
    // for p < q, so that ||r||^2 = sum over pairs of ||C||_F^2.
    void pack(const CMatrix &c, RVector &out, Eigen::Index offset) const {
        Eigen::Index pos = offset;
        const double s2 = std::sqrt(2.0);
        for (int p = 0; p < dim_; ++p) {
            out(pos++) = c(p, p).imag();
            for (int q = p + 1; q < dim_; ++q) {
                out(pos++) = s2 * c(p, q).real();
                out(pos++) = s2 * c(p, q).imag();
            }
        }
    }

    void evaluate(const RVector &x, RVector &res, RMatrix *jac) const {
        const std::vector<CMatrix> ops = operators(x);
        res.resize(num_residuals());
        if (jac) {
            jac->resize(num_residuals(), num_params());
        }
        const Eigen::Index block = static_cast<Eigen::Index>(dim_) * dim_;
        for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
            const auto [a, b] = pairs_[pi];
            const Eigen::Index offset = static_cast<Eigen::Index>(pi) * block;
            pack(ops[a] * ops[b] - ops[b] * ops[a], res, offset);
            if (!jac) {
                continue;
            }
            RVector col(num_residuals());
            for (int p = 0; p < num_params(); ++p) {
                CMatrix dc = CMatrix::Zero(dim_, dim_);
                for (const auto &en : dirs_[p]) {
                    // [E, L_b] for entries on a, [L_a, E] for entries on b,
                    // with E = value e_row e_col^T.
                    if (en.sld == a) {
                        dc.row(en.row) += en.value * ops[b].row(en.col);
                        dc.col(en.col) -= en.value * ops[b].col(en.row);
                    } else if (en.sld == b) {
                        dc.col(en.col) += en.value * ops[a].col(en.row);
                        dc.row(en.row) -= en.value * ops[a].row(en.col);
                    }
                }
                pack(dc, col, 0);
                jac->block(offset, p, block, 1) = col.head(block);
            }
        }
    }

    std::vector<ExtendedSld> to_slds(const RVector &x) const {
        std::vector<ExtendedSld> out;
        for (const auto &op : operators(x)) {
            out.push_back(ExtendedSld::from_assembled(op, rank_, kdim_));
        }
        return out;
    }

   private:
    int rank_, kdim_, edim_, dim_ = 0;
    std::vector<ExtendedSld> base_;
    std::vector<CMatrix> ops0_;
    std::vector<Direction> dirs_;
    std::vector<std::pair<int, int>> pairs_;
};

struct RestartOutcome {
    double residual = std::numeric_limits<double>::infinity();
    RVector x;
    long iterations = 0;
};

// Levenberg-Marquardt on 1/2 ||r(x)||^2 with Nielsen's damping update.
RestartOutcome levenberg_marquardt(const FreeBlockProblem &prob, RVector x, int max_iters) {
    RestartOutcome out;
    RVector r;
    RMatrix jac;
    prob.evaluate(x, r, &jac);
    double cost = 0.5 * r.squaredNorm();
    RMatrix jtj = jac.transpose() * jac;
    RVector g = jac.transpose() * r;
    double mu = 1e-3 * std::max(1e-12, jtj.diagonal().maxCoeff());
    double nu = 2.0;
    double checkpoint = cost;
    const int window = 200;
    long it = 0;
    RVector r_new;
    for (; it < max_iters; ++it) {
        if (std::sqrt(2.0 * cost) < kStopResidual || g.lpNorm<Eigen::Infinity>() < 1e-16) {
            break;
        }
        RMatrix lhs = jtj;
        lhs.diagonal().array() += mu;
        const RVector h = lhs.ldlt().solve(-g);
        if (!h.allFinite() || h.norm() <= 1e-15 * (x.norm() + 1e-15)) {
            break;
        }
        const RVector x_new = x + h;
        prob.evaluate(x_new, r_new, nullptr);
        const double cost_new = 0.5 * r_new.squaredNorm();
        const double predicted = 0.5 * h.dot(mu * h - g);
        const double rho = predicted > 0.0 ? (cost - cost_new) / predicted : -1.0;
        if (rho > 0.0 && std::isfinite(cost_new)) {
            x = x_new;
            prob.evaluate(x, r, &jac);
            cost = 0.5 * r.squaredNorm();
            jtj.noalias() = jac.transpose() * jac;
            g.noalias() = jac.transpose() * r;
            mu *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
            nu = 2.0;
        } else {
            mu *= nu;
            nu *= 2.0;
            if (!std::isfinite(mu) || mu > 1e30) {
                break;
            }
        }
        if ((it + 1) % window == 0) {
            if (cost > checkpoint * (1.0 - 1e-6)) {
                ++it;
                break;
            }
            checkpoint = cost;
        }
    }
    out.residual = std::sqrt(2.0 * cost);
    out.x = std::move(x);
    out.iterations = it;
    return out;
}

double fixed_block_scale(const std::vector<ExtendedSld> &slds) {
    double sum = 0.0;
    long count = 0;
    for (const auto &l : slds) {
        sum += l.support.squaredNorm() + l.support_kernel.squaredNorm();
        count += l.support.size() + l.support_kernel.size();
    }
    return count > 0 ? std::max(1e-6, std::sqrt(sum / static_cast<double>(count))) : 1.0;
}

}  // namespace

const char *classification_name(Classification c) {
    switch (c) {
        case Classification::Attainable: return "Attainable";
        case Classification::CertifiedUnattainable: return "CertifiedUnattainable";
        case Classification::Undetermined: return "Undetermined";
    }
    return "Unknown";
}

const char *certificate_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::SupportBlockNonzero: return "SupportBlockNonzero";
        case CertificateKind::KernelLinearSystemInfeasible: return "KernelLinearSystemInfeasible";
        case CertificateKind::Theorem1ConditionFailed: return "Theorem1ConditionFailed";
    }
    return "Unknown";
}

const char *theorem1_condition_name(Theorem1Condition c) {
    switch (c) {
        case Theorem1Condition::CommutatorRank: return "CommutatorRank";
        case Theorem1Condition::ImaginaryOverlap: return "ImaginaryOverlap";
        case Theorem1Condition::SpanMembership: return "SpanMembership";
    }
    return "Unknown";
}

double max_commutator_norm(const std::vector<ExtendedSld> &slds) {
    double worst = 0.0;
    std::vector<CMatrix> ops;
    for (const auto &l : slds) {
        ops.push_back(l.assemble());
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            worst = std::max(worst, commutator(ops[i], ops[j]).norm());
        }
    }
    return worst;
}

AttainabilityResult check_theorem1(const DecomposedModel &model, const std::vector<ExtendedSld> &slds) {
    if (slds.size() != 2 || model.kernel_dim() != 1) {
        throw Error(ErrorCode::NotApplicable, "requires two parameters and a one-dimensional kernel");
    }
    const CMatrix &l1s = slds[0].support;
    const CMatrix &l2s = slds[1].support;
    const CVector l1 = slds[0].support_kernel.col(0);
    const CVector l2 = slds[1].support_kernel.col(0);
    if (l1.norm() <= 1e-12 || l2.norm() <= 1e-12) {
        throw Error(ErrorCode::NotApplicable, "a support-kernel vector is zero");
    }
    const CVector l2_perp = l2 - l1 * (l1.dot(l2) / l1.squaredNorm());
    if (l2_perp.norm() <= 1e-9 * l2.norm()) {
        throw Error(ErrorCode::NotApplicable, "support-kernel vectors are parallel");
    }

    Theorem1Diagnostics diag;
    const CMatrix comm = l1s * l2s - l2s * l1s;
    diag.support_commutator_residual = (comm + l1 * l2.adjoint() - l2 * l1.adjoint()).norm();
    const CMatrix h = Complex(0.0, 1.0) * comm;
    const RVector ev = eigenvalues_hermitian(h);
    const double rank_tol = kBlockTol * tolerance_scale(h);
    diag.commutator_rank = static_cast<int>((ev.array().abs() > rank_tol).count());
    diag.imaginary_overlap = std::abs(l1.dot(l2).imag());

    // (L1^s - k1)|l2> = (L2^s - k2)|l1>  <=>  k1|l2> - k2|l1> = L1^s|l2> - L2^s|l1>, k real.
    const CVector v = l1s * l2 - l2s * l1;
    const auto r = l1.size();
    RMatrix a(2 * r, 2);
    RVector b(2 * r);
    a.col(0) << l2.real(), l2.imag();
    a.col(1) << -l1.real(), -l1.imag();
    b << v.real(), v.imag();
    const RVector k = a.colPivHouseholderQr().solve(b);
    diag.k1 = k(0);
    diag.k2 = k(1);
    diag.span_residual = (a * k - b).norm();

    AttainabilityResult res;
    res.theorem1 = diag;
    const bool rank_ok = diag.commutator_rank == 2;
    const bool im_ok = diag.imaginary_overlap <= kBlockTol;
    const bool support_ok = diag.support_commutator_residual <= kBlockTol;
    const bool span_ok = diag.span_residual <= kBlockTol;

    auto fail = [&](Theorem1Condition c, double residual, std::string detail) {
        res.classification = Classification::CertifiedUnattainable;
        res.certificate = Certificate{CertificateKind::Theorem1ConditionFailed, residual, c, std::move(detail)};
        return res;
    };
    if (!rank_ok) {
        return fail(Theorem1Condition::CommutatorRank, diag.support_commutator_residual,
                    "i[L1^s,L2^s] has rank " + std::to_string(diag.commutator_rank));
    }
    if (!im_ok) {
        return fail(Theorem1Condition::ImaginaryOverlap, diag.imaginary_overlap, "Im<l1|l2> != 0");
    }
    if (!support_ok) {
        return fail(Theorem1Condition::CommutatorRank, diag.support_commutator_residual,
                    "support block of [L1,L2] does not vanish");
    }
    if (!span_ok) {
        return fail(Theorem1Condition::SpanMembership, diag.span_residual,
                    "L1^s|l2> - L2^s|l1> is not in the real span of |l1>, |l2>");
    }

    Witness w;
    w.slds = slds;
    for (auto &l : w.slds) {
        l = l.with_extension(0);
    }
    w.slds[0].kernel(0, 0) = k(0);
    w.slds[1].kernel(0, 0) = k(1);
    w.commutator_norm = max_commutator_norm(w.slds);
    if (w.commutator_norm > kWitnessTol) {
        res.classification = Classification::Undetermined;
        SearchSummary s;
        s.stage = "theorem1";
        s.best_residual = w.commutator_norm;
        res.summary = s;
        return res;
    }
    res.classification = Classification::Attainable;
    res.witness = std::move(w);
    return res;
}

KernelBlockResult solve_kernel_block(const std::vector<ExtendedSld> &slds) {
    KernelBlockResult out;
    const double ss = support_block_norm(slds);
    if (ss > kBlockTol) {
        out.certificate = Certificate{CertificateKind::SupportBlockNonzero, ss, std::nullopt,
                                      "support block of [L_i,L_j] is nonzero"};
        return out;
    }
    const int n = static_cast<int>(slds.size());
    const int r = n > 0 ? slds[0].rank() : 0;
    const int k = n > 0 ? slds[0].kernel_dim() : 0;
    KernelBlockSolution sol;
    if (k == 0 || n < 2) {
        sol.particular.assign(n, CMatrix::Zero(k, k));
        out.solution = std::move(sol);
        return out;
    }
    const std::vector<CMatrix> basis = hermitian_basis(k);
    const int per = static_cast<int>(basis.size());
    const int unknowns = n * per;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    const int rows_per = 2 * r * k;
    RMatrix a = RMatrix::Zero(rows_per * static_cast<int>(pairs.size()), unknowns);
    RVector b(a.rows());
    auto pack = [&](const CMatrix &m, RMatrix &dst, int row0, int col) {
        int pos = row0;
        for (int p = 0; p < r; ++p) {
            for (int q = 0; q < k; ++q) {
                dst(pos++, col) = m(p, q).real();
                dst(pos++, col) = m(p, q).imag();
            }
        }
    };
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto [i, j] = pairs[pi];
        const int row0 = static_cast<int>(pi) * rows_per;
        const CMatrix c0 = slds[i].support * slds[j].support_kernel - slds[j].support * slds[i].support_kernel;
        RMatrix rhs(rows_per, 1);
        pack(-c0, rhs, 0, 0);
        b.segment(row0, rows_per) = rhs.col(0);
        for (int h = 0; h < per; ++h) {
            // +L_i^sk L_j^k on unknowns of j, -L_j^sk L_i^k on unknowns of i.
            pack(slds[i].support_kernel * basis[h], a, row0, j * per + h);
            pack(-slds[j].support_kernel * basis[h], a, row0, i * per + h);
        }
    }
    Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RVector &sv = svd.singularValues();
    const double cutoff = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    RVector x = RVector::Zero(unknowns);
    int rank = 0;
    for (Eigen::Index s = 0; s < sv.size(); ++s) {
        if (sv(s) > cutoff) {
            x += svd.matrixV().col(s) * (svd.matrixU().col(s).dot(b) / sv(s));
            ++rank;
        }
    }
    sol.residual = (a * x - b).norm();
    if (sol.residual > kLinearResidualTol) {
        out.certificate = Certificate{CertificateKind::KernelLinearSystemInfeasible, sol.residual,
                                      std::nullopt, "support-kernel commutator block cannot be cancelled"};
        return out;
    }
    auto unpack = [&](const RVector &v) {
        std::vector<CMatrix> blocks(n, CMatrix::Zero(k, k));
        for (int j = 0; j < n; ++j) {
            for (int h = 0; h < per; ++h) {
                blocks[j] += v(j * per + h) * basis[h];
            }
        }
        return blocks;
    };
    sol.particular = unpack(x);
    for (int c = rank; c < unknowns; ++c) {
        sol.homogeneous.push_back(unpack(svd.matrixV().col(c)));
    }
    out.solution = std::move(sol);
    return out;
}

AttainabilityResult search_witness(const DecomposedModel &model, const SearchConfig &config) {
    SearchConfig cfg = config;
    if (cfg.e_max == -1) {
        cfg.e_max = model.canonical.dim;
    }
    if (cfg.e_max < 0 || cfg.restarts < 1 || cfg.max_iters < 1) {
        throw Error(ErrorCode::ConfigInvalid, "need e_max >= 0, restarts >= 1 and max_iters >= 1");
    }
    const std::vector<ExtendedSld> slds = compute_slds(model);
    AttainabilityResult res;
    SearchSummary summary;
    summary.restarts = cfg.restarts;
    summary.max_iters = cfg.max_iters;
    summary.seed = cfg.seed;

    auto attainable = [&](std::vector<ExtendedSld> ops, std::string stage) {
        Witness w;
        w.slds = std::move(ops);
        w.commutator_norm = max_commutator_norm(w.slds);
        summary.stage = std::move(stage);
        summary.best_residual = w.commutator_norm;
        res.classification = Classification::Attainable;
        res.witness = std::move(w);
        res.summary = summary;
        return res;
    };

    if (slds.size() < 2) {
        return attainable(slds, "single-parameter");
    }
    KernelBlockResult kb = solve_kernel_block(slds);
    if (kb.certificate) {
        summary.stage = "linear";
        summary.best_residual = kb.certificate->residual;
        res.classification = Classification::CertifiedUnattainable;
        res.certificate = kb.certificate;
        res.summary = summary;
        return res;
    }
    const KernelBlockSolution &sol = *kb.solution;
    std::vector<ExtendedSld> base = slds;
    for (std::size_t j = 0; j < base.size(); ++j) {
        base[j].kernel = sol.particular[j];
    }
    const double base_residual = max_commutator_norm(base);
    if (base_residual <= kWitnessTol) {
        summary.ext_dims_tried.push_back(0);
        summary.best_residual_per_dim.push_back(base_residual);
        return attainable(base, model.kernel_dim() == 0 ? "support" : "linear");
    }
    summary.best_residual = base_residual;
    if (!cfg.nonlinear) {
        summary.stage = "linear";
        res.summary = summary;
        return res;
    }

    const double scale = fixed_block_scale(slds);
    const int threads = resolve_threads(cfg.threads);
    for (int e = 0; e <= cfg.e_max; ++e) {
        const FreeBlockProblem prob(base, sol, e);
        summary.ext_dims_tried.push_back(e);
        if (prob.num_params() == 0) {
            summary.best_residual_per_dim.push_back(base_residual);
            continue;
        }
        std::vector<RestartOutcome> outcomes(cfg.restarts);
        parallel_for(cfg.restarts, threads, [&](int i) {
            std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(i)));
            std::normal_distribution<double> normal(0.0, scale);
            RVector x0(prob.num_params());
            for (Eigen::Index p = 0; p < x0.size(); ++p) {
                x0(p) = normal(rng);
            }
            outcomes[i] = levenberg_marquardt(prob, std::move(x0), cfg.max_iters);
        });
        int best = 0;
        for (int i = 0; i < cfg.restarts; ++i) {
            summary.iterations += outcomes[i].iterations;
            if (outcomes[i].residual < outcomes[best].residual) {
                best = i;
            }
        }
        summary.best_residual_per_dim.push_back(outcomes[best].residual);
        summary.best_residual = std::min(summary.best_residual, outcomes[best].residual);
        std::vector<ExtendedSld> cand = prob.to_slds(outcomes[best].x);
        if (max_commutator_norm(cand) <= kWitnessTol) {
            return attainable(std::move(cand), "nonlinear");
        }
    }
    summary.stage = "nonlinear";
    res.classification = Classification::Undetermined;
    res.summary = summary;
    return res;
}

Povm witness_to_povm(const Witness &witness, const DecomposedModel &model, std::uint64_t seed) {
    std::vector<CMatrix> ops;
    for (const auto &l : witness.slds) {
        ops.push_back(l.assemble());
    }
    if (ops.empty()) {
        throw Error(ErrorCode::JointDiagonalizationFailed, "empty witness");
    }
    if (max_commutator_norm(witness.slds) > kWitnessTol) {
        throw Error(ErrorCode::JointDiagonalizationFailed, "witness operators do not commute");
    }
    const int d = model.canonical.dim;
    const CMatrix u = joint_eigenbasis(ops, seed);
    Povm canon;
    canon.dim = d;
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        const CVector v = u.col(c).head(d);
        if (v.squaredNorm() <= 1e-14) {
            continue;
        }
        canon.elements.push_back(v * v.adjoint());
    }
    canon = merge_null_outcomes(model.canonical, canon);
    const CMatrix basis = model.space.basis();
    Povm out;
    out.dim = d;
    for (const auto &e : canon.elements) {
        out.elements.push_back(hermitian_part(basis * e * basis.adjoint()));
    }
    return out;
}

}  // namespace qcrb
