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

#ifndef QCRB_TESTS_SUPPORT_H
#define QCRB_TESTS_SUPPORT_H

#include <complex>
#include <random>
#include <vector>

#include <Eigen/SVD>

#include "qcrb/catalog.h"
#include "qcrb/sld.h"

namespace qcrb::oracle {

/// Random valid model with rank r: rho = U diag(c, 0) U^dagger and
/// derivatives whose kernel-kernel block vanishes in the eigenbasis.
inline StatisticalModel random_model(std::mt19937_64 &rng, int d, int r, int n) {
    std::uniform_real_distribution<double> uni(0.2, 1.0);
    RVector c(r);
    for (int i = 0; i < r; ++i) {
        c(i) = uni(rng);
    }
    c /= c.sum();
    CMatrix diag = CMatrix::Zero(d, d);
    for (int i = 0; i < r; ++i) {
        diag(i, i) = c(i);
    }
    const CMatrix u = random_unitary(rng, d);
    StatisticalModel m;
    m.dim = d;
    m.num_params = n;
    m.rho = hermitian_part(u * diag * u.adjoint());
    for (int j = 0; j < n; ++j) {
        CMatrix s = random_hermitian(rng, d);
        s.bottomRightCorner(d - r, d - r).setZero();
        const Complex t = s.trace();
        for (int i = 0; i < r; ++i) {
            s(i, i) -= t / static_cast<double>(r);
        }
        m.drho.push_back(hermitian_part(u * s * u.adjoint()));
    }
    m.label = "random";
    return m;
}

/// Minimum-norm solution of (S L + L S)/2 = S_j via the vectorized linear
/// system (row-major vec: vec(S L) = (S kron I) vec L, vec(L S) = (I kron S^T) vec L).
inline CMatrix sylvester_oracle(const CMatrix &s, const CMatrix &sj) {
    const Eigen::Index d = s.rows();
    const CMatrix id = CMatrix::Identity(d, d);
    CMatrix a = CMatrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index k = 0; k < d; ++k) {
                for (Eigen::Index l = 0; l < d; ++l) {
                    a(i * d + j, k * d + l) = 0.5 * (s(i, k) * id(j, l) + id(i, k) * s(l, j));
                }
            }
        }
    }
    CVector b(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            b(i * d + j) = sj(i, j);
        }
    }
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const CVector x = svd.solve(b);
    CMatrix out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out(i, j) = x(i * d + j);
        }
    }
    return out;
}

/// Eigenvalues from the characteristic polynomial: Faddeev-LeVerrier
/// coefficients, then Durand-Kerner root iteration in long double.
inline std::vector<std::complex<long double>> charpoly_eigenvalues(const CMatrix &m) {
    using C = std::complex<long double>;
    const int n = static_cast<int>(m.rows());
    using M = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
    const M a = m.cast<C>();
    std::vector<C> coef(n + 1);  // x^n + c_{n-1} x^{n-1} + ... + c_0
    coef[n] = 1;
    M mk = M::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        const M prev = mk + M::Identity(n, n) * coef[n - k + 1];
        mk = a * prev;
        coef[n - k] = -mk.trace() / static_cast<long double>(k);
    }
    auto poly = [&](C x) {
        C v = coef[n];
        for (int k = n - 1; k >= 0; --k) {
            v = v * x + coef[k];
        }
        return v;
    };
    std::vector<C> roots(n);
    const C seed(0.4L, 0.9L);
    C p = 1;
    for (int i = 0; i < n; ++i) {
        roots[i] = p;
        p *= seed;
    }
    for (int it = 0; it < 4000; ++it) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            C den = 1;
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    den *= roots[i] - roots[j];
                }
            }
            const C step = poly(roots[i]) / den;
            roots[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L) {
            break;
        }
    }
    return roots;
}

inline ExtendedSld random_free_blocks(std::mt19937_64 &rng, const ExtendedSld &l, int e) {
    ExtendedSld out = l.with_extension(e);
    const int k = l.kernel_dim();
    if (k > 0) {
        out.kernel = random_hermitian(rng, k);
        if (e > 0) {
            out.kernel_ext = random_complex(rng, k, e);
        }
    }
    if (e > 0) {
        out.ext = random_hermitian(rng, e);
    }
    return out;
}

inline std::vector<StatisticalModel> catalog_models() {
    std::vector<StatisticalModel> out;
    for (const auto &id : catalog_ids()) {
        out.push_back(get_example(id).model);
    }
    return out;
}

}  // namespace qcrb::oracle

#endif
