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

#ifndef QCRB_TESTS_PROPERTIES_H
#define QCRB_TESTS_PROPERTIES_H

#include <algorithm>
#include <string>

#include "qcrb/optimizer.h"
#include "qcrb/report.h"
#include "support.h"

namespace qcrb::oracle {

struct PropertyResult {
    bool ok = true;
    double worst = 0.0;
    long cases = 0;
    std::string detail;

    void record(double value, double limit) {
        ++cases;
        worst = std::max(worst, value);
        ok = ok && value <= limit;
    }
};

/// SLD equation residual with random free blocks.
inline PropertyResult sld_equation_property(int per_model = 100) {
    PropertyResult res;
    std::mt19937_64 rng(801);
    for (const auto &m : catalog_models()) {
        const DecomposedModel dm = canonical_decompose(m);
        const auto slds = compute_slds(dm);
        for (int t = 0; t < per_model; ++t) {
            const int e = t % 3;
            for (int j = 0; j < m.num_params; ++j) {
                res.record(sld_equation_residual(dm, random_free_blocks(rng, slds[j], e), j), 1e-10);
            }
        }
    }
    return res;
}

/// QFIM and support-support commutator block do not depend on free blocks.
inline PropertyResult free_block_invariance_property(int per_model = 100) {
    PropertyResult res;
    std::mt19937_64 rng(802);
    for (const auto &m : catalog_models()) {
        const DecomposedModel dm = canonical_decompose(m);
        const auto slds = compute_slds(dm);
        const RMatrix j0 = qfim(dm, slds);
        const int r = dm.rank();
        const CMatrix ss0 = commutator(slds[0].assemble(), slds[1].assemble()).topLeftCorner(r, r);
        for (int t = 0; t < per_model; ++t) {
            const int e = t % 3;
            std::vector<ExtendedSld> moved;
            for (const auto &l : slds) {
                moved.push_back(random_free_blocks(rng, l, e));
            }
            res.record((qfim(dm, moved) - j0).cwiseAbs().maxCoeff(), 1e-10);
            const CMatrix ss = commutator(moved[0].assemble(), moved[1].assemble()).topLeftCorner(r, r);
            res.record((ss - ss0).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
    return res;
}

inline Povm random_povm(std::mt19937_64 &rng, int d) {
    std::uniform_int_distribution<int> outcomes(d, 2 * d + 1);
    return rank_one_povm(random_complex(rng, outcomes(rng), d));
}

/// F <= J_S; worst is the largest violation max(0, -min eig(J - F)).
inline PropertyResult information_order_property(int per_model = 200) {
    PropertyResult res;
    std::mt19937_64 rng(803);
    for (const auto &m : catalog_models()) {
        const DecomposedModel dm = canonical_decompose(m);
        const RMatrix j = qfim(dm, compute_slds(dm));
        for (int t = 0; t < per_model; ++t) {
            const RMatrix f = classical_fisher(m, random_povm(rng, m.dim));
            res.record(std::max(0.0, -min_eigenvalue(RMatrix(j - f))), 1e-8);
        }
    }
    return res;
}

/// Locally unbiased optimal estimator: residuals and MSE = F^-1.
inline PropertyResult estimator_property(int per_model = 200) {
    PropertyResult res;
    std::mt19937_64 rng(804);
    for (const auto &m : catalog_models()) {
        for (int t = 0; t < per_model; ++t) {
            const Povm p = random_povm(rng, m.dim);
            const RMatrix f = classical_fisher(m, p);
            if (min_eigenvalue(f) < 1e-6) {
                continue;
            }
            const EstimatorTable est = optimal_estimator(m, p, f);
            const UnbiasednessResiduals ur = unbiasedness_residuals(m, p, est);
            res.record(ur.mean, 1e-8);
            res.record(ur.derivative, 1e-8);
            const RMatrix finv = symmetric_inverse(f, 1e-12, ErrorCode::SingularCfi);
            res.record((mse_matrix(m, p, est) - finv).cwiseAbs().maxCoeff() / std::max(1.0, finv.norm()), 1e-8);
        }
    }
    return res;
}

struct Scalars {
    std::vector<double> values;
    Classification classification = Classification::Undetermined;
};

inline Scalars scalar_outputs(const StatisticalModel &m) {
    AnalysisOptions opt;
    opt.search_config.e_max = 1;
    opt.search_config.restarts = 4;
    opt.search_config.max_iters = 500;
    const AnalysisReport rep = analyze_model(m, opt);
    Scalars s;
    for (Eigen::Index i = 0; i < rep.qfim.size(); ++i) {
        s.values.push_back(rep.qfim.data()[i]);
    }
    s.values.push_back(rep.sldcrb);
    s.values.push_back(rep.equality.trace_residual);
    s.values.push_back(rep.equality.trace_abs_residual);
    s.values.push_back(rep.equality.cs_eq_ch);
    s.values.push_back(rep.equality.cs_eq_cnh);
    for (const auto &p : rep.commutators.pairs) {
        s.values.push_back(p.norms.ss);
        s.values.push_back(p.norms.sk);
        s.values.push_back(p.norms.kk);
    }
    if (rep.theorem1 && rep.theorem1->theorem1) {
        s.values.push_back(rep.theorem1->theorem1->span_residual);
        s.values.push_back(rep.theorem1->theorem1->imaginary_overlap);
    }
    s.values.push_back(rep.povm_trace_inverse.value_or(-1.0));
    s.classification = rep.classification;
    return s;
}

/// Scalar outputs unchanged by a unitary change of basis of the model.
inline PropertyResult basis_invariance_property(int per_model = 20) {
    PropertyResult res;
    std::mt19937_64 rng(805);
    for (const auto &m : catalog_models()) {
        const Scalars base = scalar_outputs(m);
        for (int t = 0; t < per_model; ++t) {
            const Scalars moved = scalar_outputs(transform(m, random_unitary(rng, m.dim)));
            double worst = moved.classification == base.classification ? 0.0 : 1.0;
            if (moved.values.size() != base.values.size()) {
                worst = 1.0;
            } else {
                for (std::size_t i = 0; i < base.values.size(); ++i) {
                    worst = std::max(worst, std::abs(moved.values[i] - base.values[i]));
                }
            }
            res.record(worst, 1e-8);
        }
    }
    return res;
}

/// compute_slds against the vectorized linear-solve oracle.
inline PropertyResult sld_oracle_property(int models = 50) {
    PropertyResult res;
    std::mt19937_64 rng(806);
    for (int t = 0; t < models; ++t) {
        const int d = 2 + t % 5;
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(d - 1));
        const int n = std::min(1 + t % 3, r * r - 1 + 2 * r * (d - r));
        const StatisticalModel m = random_model(rng, d, r, n);
        const DecomposedModel dm = canonical_decompose(m);
        const auto slds = compute_slds(dm);
        const CMatrix b = dm.space.basis();
        for (int j = 0; j < n; ++j) {
            const CMatrix ours = b * slds[j].assemble() * b.adjoint();
            res.record((ours - sylvester_oracle(m.rho, m.drho[j])).cwiseAbs().maxCoeff(), 1e-8);
        }
    }
    return res;
}

}  // namespace qcrb::oracle

#endif
