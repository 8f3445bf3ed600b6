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

#include "qcrb/povm.h"

#include <algorithm>
#include <cmath>

namespace qcrb {

namespace {

void check_shapes(const StatisticalModel &m, const Povm &p) {
    if (p.dim != m.dim) {
        throw Error(ErrorCode::DimensionMismatch, "POVM dimension " + std::to_string(p.dim) +
                                                      " does not match model dimension " +
                                                      std::to_string(m.dim));
    }
    for (const auto &e : p.elements) {
        if (e.rows() != p.dim || e.cols() != p.dim) {
            throw Error(ErrorCode::DimensionMismatch, "POVM element has the wrong shape");
        }
    }
}

}  // namespace

PovmReport validate_povm(const Povm &p) {
    PovmReport rep;
    if (p.dim < 1 || p.elements.empty()) {
        rep.ok = false;
        rep.problems.push_back("empty POVM");
        return rep;
    }
    CMatrix sum = CMatrix::Zero(p.dim, p.dim);
    rep.projective = true;
    for (std::size_t k = 0; k < p.elements.size(); ++k) {
        const CMatrix &e = p.elements[k];
        if (e.rows() != p.dim || e.cols() != p.dim || !all_finite(e)) {
            rep.ok = false;
            rep.problems.push_back("element " + std::to_string(k) + " has the wrong shape or non-finite entries");
            rep.min_eigenvalues.push_back(std::nan(""));
            rep.hermiticity.push_back(std::nan(""));
            rep.projective = false;
            continue;
        }
        const double h = hermiticity_residual(e);
        rep.hermiticity.push_back(h);
        if (h > 1e-10 * tolerance_scale(e)) {
            rep.ok = false;
            rep.problems.push_back("element " + std::to_string(k) + " is not Hermitian");
        }
        const double mn = min_eigenvalue(CMatrix(hermitian_part(e)));
        rep.min_eigenvalues.push_back(mn);
        if (mn < -1e-10) {
            rep.ok = false;
            rep.problems.push_back("element " + std::to_string(k) + " is not PSD");
        }
        if ((e * e - e).norm() > 1e-9) {
            rep.projective = false;
        }
        sum += e;
    }
    if (sum.rows() == p.dim) {
        rep.completeness_residual = (sum - CMatrix::Identity(p.dim, p.dim)).norm();
        if (rep.completeness_residual > 1e-9) {
            rep.ok = false;
            rep.problems.push_back("elements do not sum to the identity");
        }
    }
    return rep;
}

OutcomeStatistics outcome_statistics(const StatisticalModel &m, const Povm &p) {
    check_shapes(m, p);
    const int big_m = p.outcomes();
    OutcomeStatistics st;
    st.probabilities.resize(big_m);
    st.derivatives.resize(m.num_params, big_m);
    for (int k = 0; k < big_m; ++k) {
        st.probabilities(k) = (m.rho * p.elements[k]).trace().real();
        for (int j = 0; j < m.num_params; ++j) {
            st.derivatives(j, k) = (m.drho[j] * p.elements[k]).trace().real();
        }
    }
    return st;
}

RMatrix classical_fisher(const StatisticalModel &m, const Povm &p) {
    const OutcomeStatistics st = outcome_statistics(m, p);
    RMatrix f = RMatrix::Zero(m.num_params, m.num_params);
    for (int k = 0; k < p.outcomes(); ++k) {
        const double pk = st.probabilities(k);
        if (pk > kNullProbability) {
            f += st.derivatives.col(k) * st.derivatives.col(k).transpose() / pk;
        } else if (st.derivatives.col(k).cwiseAbs().maxCoeff() > 1e-9) {
            throw Error(ErrorCode::SingularInformation,
                        "outcome " + std::to_string(k) + " has probability " + std::to_string(pk) +
                            " but nonzero derivative");
        }
    }
    return f;
}

EstimatorTable optimal_estimator(const StatisticalModel &m, const Povm &p, const RMatrix &fisher) {
    const RMatrix finv = symmetric_inverse(fisher, 1e-12, ErrorCode::SingularCfi);
    const OutcomeStatistics st = outcome_statistics(m, p);
    EstimatorTable est;
    est.reference = RVector::Zero(m.num_params);
    est.coefficients = RMatrix::Zero(m.num_params, p.outcomes());
    for (int k = 0; k < p.outcomes(); ++k) {
        const double pk = st.probabilities(k);
        est.coefficients.col(k) = est.reference;
        if (pk > kNullProbability) {
            est.coefficients.col(k) += finv * st.derivatives.col(k) / pk;
        }
    }
    return est;
}

RMatrix mse_matrix(const StatisticalModel &m, const Povm &p, const EstimatorTable &est) {
    const OutcomeStatistics st = outcome_statistics(m, p);
    if (est.coefficients.rows() != m.num_params || est.coefficients.cols() != p.outcomes()) {
        throw Error(ErrorCode::DimensionMismatch, "estimator table shape does not match");
    }
    RMatrix v = RMatrix::Zero(m.num_params, m.num_params);
    for (int k = 0; k < p.outcomes(); ++k) {
        const RVector dev = est.coefficients.col(k) - est.reference;
        v += st.probabilities(k) * dev * dev.transpose();
    }
    return 0.5 * (v + v.transpose());
}

UnbiasednessResiduals unbiasedness_residuals(const StatisticalModel &m, const Povm &p,
                                             const EstimatorTable &est) {
    const OutcomeStatistics st = outcome_statistics(m, p);
    UnbiasednessResiduals res;
    const RVector mean = est.coefficients * st.probabilities;
    res.mean = (mean - est.reference).cwiseAbs().maxCoeff();
    const RMatrix deriv = est.coefficients * st.derivatives.transpose();  // (j, i)
    res.derivative = (deriv - RMatrix::Identity(m.num_params, m.num_params)).cwiseAbs().maxCoeff();
    return res;
}

Povm naimark_truncate(const Povm &p, int dim) {
    if (dim < 1 || dim > p.dim) {
        throw Error(ErrorCode::DimensionMismatch, "cannot truncate a " + std::to_string(p.dim) +
                                                      "-dimensional POVM to " + std::to_string(dim));
    }
    Povm out;
    out.dim = dim;
    for (const auto &e : p.elements) {
        if (e.rows() != p.dim || e.cols() != p.dim) {
            throw Error(ErrorCode::DimensionMismatch, "POVM element has the wrong shape");
        }
        out.elements.push_back(e.topLeftCorner(dim, dim));
    }
    return out;
}

Povm merge_null_outcomes(const StatisticalModel &m, const Povm &p, double threshold) {
    const OutcomeStatistics st = outcome_statistics(m, p);
    Povm out;
    out.dim = p.dim;
    CMatrix null = CMatrix::Zero(p.dim, p.dim);
    bool any_null = false;
    for (int k = 0; k < p.outcomes(); ++k) {
        if (st.probabilities(k) < threshold) {
            null += p.elements[k];
            any_null = true;
        } else {
            out.elements.push_back(p.elements[k]);
        }
    }
    if (any_null && null.norm() > 1e-14) {
        out.elements.push_back(null);
    }
    return out;
}

}  // namespace qcrb
