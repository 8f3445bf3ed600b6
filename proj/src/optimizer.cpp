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

#include "qcrb/optimizer.h"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "qcrb/nelder_mead.h"
#include "qcrb/parallel.h"

namespace qcrb {

namespace {

constexpr double kPenaltyEps = 1e-9;

CMatrix polar_factor(const CMatrix &a) {
    const Eigen::SelfAdjointEigenSolver<CMatrix> es(a.adjoint() * a);
    const RVector inv_sqrt = es.eigenvalues().array().max(1e-300).rsqrt();
    return a * (es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint());
}

CMatrix unpack(const RVector &x, int m, int d) {
    CMatrix a(m, d);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < d; ++j) {
            const Eigen::Index p = 2 * (static_cast<Eigen::Index>(i) * d + j);
            a(i, j) = Complex(x(p), x(p + 1));
        }
    }
    return a;
}

}  // namespace

const char *optimizer_method_name(OptimizerMethod m) {
    return m == OptimizerMethod::Simplex ? "simplex" : "fdgrad";
}

OptimizerMethod parse_optimizer_method(const std::string &s) {
    if (s == "simplex") {
        return OptimizerMethod::Simplex;
    }
    if (s == "fdgrad") {
        return OptimizerMethod::FdGradient;
    }
    throw Error(ErrorCode::ConfigInvalid, "unknown method '" + s + "'");
}

long default_max_evals(int num_outcomes, int dim) {
    const long p = 2L * num_outcomes * dim;
    return 500L * p;
}

Povm rank_one_povm(const CMatrix &a) {
    const CMatrix v = polar_factor(a);
    Povm out;
    out.dim = static_cast<int>(v.cols());
    for (Eigen::Index k = 0; k < v.rows(); ++k) {
        const CVector w = v.row(k).adjoint();
        out.elements.push_back(w * w.adjoint());
    }
    return out;
}

double povm_objective(const StatisticalModel &model, const CMatrix &a) {
    const CMatrix v = polar_factor(a);
    const int n = model.num_params;
    RMatrix f = RMatrix::Zero(n, n);
    RVector dk(n);
    for (Eigen::Index k = 0; k < v.rows(); ++k) {
        const CVector w = v.row(k).adjoint();
        const double p = w.dot(model.rho * w).real();
        if (!(p > 1e-300)) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            dk(j) = w.dot(model.drho[j] * w).real();
        }
        f.noalias() += dk * dk.transpose() / p;
    }
    const RVector ev = Eigen::SelfAdjointEigenSolver<RMatrix>(f, Eigen::EigenvaluesOnly).eigenvalues();
    double value = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        value += 1.0 / (std::max(ev(i), 0.0) + kPenaltyEps);
    }
    return value;
}

OptimizerResult optimize_povm(const StatisticalModel &model, const OptimizerConfig &config) {
    const ValidationReport vr = validate(model);
    if (!vr.ok) {
        throw Error(ErrorCode::InvalidModel, vr.summary());
    }
    const int d = model.dim;
    const int n = model.num_params;
    const int m = config.num_outcomes == 0 ? d + 2 : config.num_outcomes;
    if (m < n + 1) {
        throw Error(ErrorCode::ConfigInvalid, "need at least n + 1 = " + std::to_string(n + 1) + " outcomes");
    }
    if (m < d) {
        throw Error(ErrorCode::ConfigInvalid, "rank-1 completeness needs at least d = " + std::to_string(d) + " outcomes");
    }
    if (config.restarts < 1 || config.max_evals < 0) {
        throw Error(ErrorCode::ConfigInvalid, "need restarts >= 1 and max_evals >= 0");
    }
    const long budget = config.max_evals == 0 ? default_max_evals(m, d) : config.max_evals;
    const Eigen::Index params = 2L * m * d;

    const Objective objective = [&](const RVector &x) { return povm_objective(model, unpack(x, m, d)); };
    MinimizeOptions opt;
    opt.max_evals = budget;
    opt.trace_every = static_cast<int>(std::max<long>(1, budget / 50));

    std::vector<MinimizeResult> runs(config.restarts);
    parallel_for(config.restarts, resolve_threads(config.threads), [&](int r) {
        std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(r), 0));
        std::normal_distribution<double> normal(0.0, 1.0);
        RVector x0(params);
        for (Eigen::Index i = 0; i < params; ++i) {
            x0(i) = normal(rng);
        }
        runs[r] = config.method == OptimizerMethod::Simplex ? nelder_mead(objective, std::move(x0), opt)
                                                            : fd_bfgs(objective, std::move(x0), opt);
    });

    OptimizerResult out;
    out.num_outcomes = m;
    out.max_evals = budget;
    out.min_evaluated = std::numeric_limits<double>::infinity();
    int best = -1;
    double best_value = std::numeric_limits<double>::infinity();
    for (int r = 0; r < config.restarts; ++r) {
        out.evaluations += runs[r].evaluations;
        out.min_evaluated = std::min(out.min_evaluated, runs[r].value);
        double exact = std::numeric_limits<double>::infinity();
        if (runs[r].x.size() == params) {
            try {
                const Povm povm = rank_one_povm(unpack(runs[r].x, m, d));
                exact = trace_inverse(classical_fisher(model, povm), 1e-12, ErrorCode::SingularCfi);
            } catch (const Error &) {
            }
        }
        out.restart_values.push_back(exact);
        out.restart_traces.push_back(runs[r].trace);
        if (exact < best_value) {
            best_value = exact;
            best = r;
        }
    }
    if (best < 0 || !std::isfinite(best_value)) {
        throw Error(ErrorCode::NoFiniteObjective, "every restart stayed singular");
    }
    out.best_value = best_value;
    out.best_povm = rank_one_povm(unpack(runs[best].x, m, d));
    return out;
}

}  // namespace qcrb
