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

#include "qcrb/catalog.h"

#include <cmath>
#include <initializer_list>
#include <map>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace qcrb {

namespace {

using IntRows = std::initializer_list<std::initializer_list<int>>;

const Complex I1(0.0, 1.0);

CMatrix q(int den, IntRows rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.begin()->size());
    CMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto &row : rows) {
        Eigen::Index j = 0;
        for (int v : row) {
            m(i, j++) = static_cast<double>(v) / den;
        }
        ++i;
    }
    return m;
}

CMatrix state(int den, std::initializer_list<int> diag) {
    const auto d = static_cast<Eigen::Index>(diag.size());
    CMatrix m = CMatrix::Zero(d, d);
    Eigen::Index i = 0;
    for (int v : diag) {
        m(i, i) = static_cast<double>(v) / den;
        ++i;
    }
    return m;
}

// [[ss, sk], [sk^dagger, 0]]
CMatrix blocks(const CMatrix &ss, const CMatrix &sk) {
    ExtendedSld b{ss, sk, CMatrix::Zero(sk.cols(), sk.cols()), CMatrix::Zero(sk.cols(), 0), CMatrix::Zero(0, 0)};
    return b.assemble();
}

CMatrix extended(const CMatrix &s, const CMatrix &sk, const CMatrix &k, const CMatrix &ke, const CMatrix &e) {
    return ExtendedSld{s, sk, k, ke, e}.assemble();
}

StatisticalModel make_model(std::string label, CMatrix rho, std::vector<CMatrix> drho) {
    StatisticalModel m;
    m.dim = static_cast<int>(rho.rows());
    m.num_params = static_cast<int>(drho.size());
    m.rho = std::move(rho);
    m.drho = std::move(drho);
    m.label = std::move(label);
    return m;
}

Rational r(long long num, long long den = 1) { return {num, den}; }

// Entries a + b sqrt(2).
struct Surd {
    int a;
    int b;
    double value() const { return a + b * std::sqrt(2.0); }
};

Povm projectors(const std::vector<CVector> &vectors) {
    Povm p;
    p.dim = static_cast<int>(vectors.front().size());
    for (const auto &v : vectors) {
        const CVector u = v.normalized();
        p.elements.push_back(u * u.adjoint());
    }
    return p;
}

CVector surd_vector(std::initializer_list<Surd> entries) {
    CVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto &s : entries) {
        v(i++) = s.value();
    }
    return v;
}

CatalogEntry example_a() {
    CatalogEntry e;
    e.id = "A";
    e.description = "d=4, rank 3, two parameters; sk system infeasible, optimizer gap";
    e.model = make_model("A", state(3, {1, 1, 1, 0}),
                         {q(6, {{2, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, -4, 0}, {0, 1, 0, 0}}),
                          q(6, {{0, 2, 0, 0}, {2, 0, 2, 0}, {0, 2, 0, -3}, {0, 0, -3, 0}})});
    e.rank = 3;
    e.qfim = {{r(7, 3), r(0)}, {r(0), r(13, 3)}};
    e.sldcrb = r(60, 91);
    e.classification = Classification::CertifiedUnattainable;
    return e;
}

CatalogEntry example_b() {
    CatalogEntry e;
    e.id = "B";
    e.description = "d=3, rank 2, one-dimensional kernel; closed-form attainable";
    e.model = make_model("B", state(2, {1, 1, 0}),
                         {q(4, {{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}), q(4, {{2, 2, -1}, {2, -2, 1}, {-1, 1, 0}})});
    e.rank = 2;
    e.qfim = {{r(2), r(1)}, {r(1), r(3)}};
    e.sldcrb = r(1);
    e.classification = Classification::Attainable;
    e.theorem1_scalars = std::make_pair(0.0, 1.0);
    e.witnesses.push_back({0, {q(1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), q(1, {{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}})}});
    return e;
}

CatalogEntry example_c() {
    CatalogEntry e;
    e.id = "C";
    e.description = "d=4, rank 2; commuting extension without extra dimensions";
    e.model = make_model("C", state(2, {1, 1, 0, 0}),
                         {q(4, {{2, 0, 1, 0}, {0, -2, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
                          I1 * q(4, {{0, 2, 0, 1}, {-2, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}})});
    e.rank = 2;
    e.qfim = {{r(2), r(0)}, {r(0), r(2)}};
    e.sldcrb = r(1);
    e.classification = Classification::Attainable;
    e.witnesses.push_back({0,
                           {q(1, {{1, 0, 1, 0}, {0, -1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, -1}}),
                            I1 * q(1, {{0, 1, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, -1}, {-1, 0, 1, 0}})}});
    const double s2 = std::sqrt(2.0);
    const CMatrix zero2 = CMatrix::Zero(2, 2);
    CMatrix ke1 = zero2, ke2 = zero2;
    ke1(0, 0) = s2;
    ke2(1, 0) = I1 * s2;
    e.witnesses.push_back({2,
                           {extended(q(1, {{1, 0}, {0, -1}}), q(1, {{1, 0}, {0, 1}}), zero2, ke1, zero2),
                            extended(I1 * q(1, {{0, 1}, {-1, 0}}), I1 * q(1, {{0, 1}, {1, 0}}), zero2, ke2, zero2)}});
    const double h = 1.0;
    std::vector<CVector> vs(4, CVector(4));
    vs[0] << 0, -h, 0, h;
    vs[1] << h, 0, h, 0;
    vs[2] << -I1, h, I1, h;
    vs[3] << I1, h, -I1, h;
    e.povm = projectors(vs);
    return e;
}

CatalogEntry example_d() {
    CatalogEntry e;
    e.id = "D";
    e.description = "d=6, rank 2; commuting extension needs two extra dimensions";
    e.model = make_model(
        "D", state(2, {1, 1, 0, 0, 0, 0}),
        {blocks(q(4, {{2, 0}, {0, -2}}), q(4, {{1, 0, 0, 0}, {0, 0, 0, 1}})),
         blocks(q(4, {{0, 2}, {2, 0}}), q(4, {{0, 0, 0, 1}, {-1, -1, 1, 1}}))});
    e.rank = 2;
    e.qfim = {{r(2), r(1, 2)}, {r(1, 2), r(7, 2)}};
    e.sldcrb = r(22, 27);
    e.classification = Classification::Attainable;
    e.witnesses.push_back(
        {2,
         {extended(q(1, {{1, 0}, {0, -1}}), q(1, {{1, 0, 0, 0}, {0, 0, 0, 1}}),
                   q(1, {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}),
                   q(1, {{0, 0}, {0, -1}, {1, 0}, {0, 0}}), q(1, {{0, -1}, {-1, 0}})),
          extended(q(1, {{0, 1}, {1, 0}}), q(1, {{0, 0, 0, 1}, {-1, -1, 1, 1}}),
                   q(1, {{0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}}),
                   q(1, {{0, 0}, {0, 0}, {0, 0}, {1, 1}}), q(1, {{0, 0}, {0, 0}}))}});
    e.povm = projectors({
        surd_vector({{0, 0}, {2, 0}, {0, 0}, {1, 0}, {-1, 0}, {-2, 0}, {1, 0}, {1, 0}}),
        surd_vector({{2, 0}, {3, 0}, {-2, 0}, {-1, 0}, {1, 0}, {3, 0}, {1, 0}, {1, 0}}),
        surd_vector({{2, 0}, {-2, 0}, {-2, 0}, {-1, 0}, {1, 0}, {-2, 0}, {1, 0}, {1, 0}}),
        surd_vector({{1, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}),
        surd_vector({{0, 0}, {0, 0}, {0, 0}, {1, 1}, {1, 1}, {0, 0}, {-1, 0}, {1, 0}}),
        surd_vector({{0, 0}, {0, 0}, {0, 0}, {-1, 0}, {-1, 0}, {0, 0}, {-1, -1}, {1, 1}}),
        surd_vector({{0, 0}, {-1, 0}, {0, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {1, 0}}),
        surd_vector({{-1, 0}, {0, 0}, {1, 0}, {-1, 0}, {1, 0}, {0, 0}, {1, 0}, {1, 0}}),
    });
    return e;
}

CatalogEntry example_e() {
    CatalogEntry e;
    e.id = "E";
    e.description = "d=5, rank 3; unique kernel blocks, no commuting extension found";
    e.model = make_model(
        "E", state(3, {1, 1, 1, 0, 0}),
        {blocks(q(6, {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}), q(6, {{1, 0}, {0, 0}, {0, 1}})),
         blocks(q(6, {{0, 2, 0}, {2, 0, 2}, {0, 2, 0}}), q(6, {{1, 1}, {-1, 1}, {1, -1}}))});
    e.rank = 3;
    e.qfim = {{r(4, 3), r(0)}, {r(0), r(10, 3)}};
    e.sldcrb = r(21, 20);
    e.classification = Classification::Undetermined;
    e.kernel_blocks = {q(1, {{3, 2}, {2, 1}}), q(1, {{4, 2}, {2, 0}})};
    return e;
}

CatalogEntry example_d_appendix() {
    CatalogEntry e;
    e.id = "D-appendix";
    e.description = "d=5, rank 3; kernel linear system infeasible";
    e.model = make_model(
        "D-appendix", state(3, {1, 1, 1, 0, 0}),
        {blocks(q(6, {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}), q(6, {{1, 0}, {0, 0}, {0, 1}})),
         blocks(q(6, {{0, 2, 0}, {2, 0, 2}, {0, 2, 0}}), q(6, {{0, 1}, {-1, 1}, {1, 0}}))});
    e.rank = 3;
    e.qfim = {{r(4, 3), r(0)}, {r(0), r(8, 3)}};
    e.sldcrb = r(9, 8);
    e.sldcrb_derived = true;
    e.classification = Classification::CertifiedUnattainable;
    return e;
}

const std::map<std::string, CatalogEntry> &entries() {
    static const std::map<std::string, CatalogEntry> table = [] {
        std::map<std::string, CatalogEntry> t;
        for (auto &&e : {example_a(), example_b(), example_c(), example_d(), example_e(), example_d_appendix()}) {
            t.emplace(e.id, e);
        }
        return t;
    }();
    return table;
}

CMatrix hermitian_exp(const CMatrix &x) {
    const Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(x));
    const CVector ex = es.eigenvalues().array().exp().cast<Complex>();
    return es.eigenvectors() * ex.asDiagonal() * es.eigenvectors().adjoint();
}

void require_commuting(const ExponentialFamilyModel &fam) {
    for (std::size_t i = 0; i < fam.generators.size(); ++i) {
        if (fam.generators[i].rows() != fam.base_state.rows() || fam.generators[i].cols() != fam.base_state.cols()) {
            throw Error(ErrorCode::DimensionMismatch, "generator shape differs from base state");
        }
        for (std::size_t j = i + 1; j < fam.generators.size(); ++j) {
            const double c = commutator(fam.generators[i], fam.generators[j]).norm();
            if (c > 1e-9) {
                throw Error(ErrorCode::NonCommutingGenerators,
                            "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
            }
        }
    }
}

}  // namespace

std::string Rational::str() const {
    const long long g = std::gcd(num, den);
    long long n = g ? num / g : num;
    long long d = g ? den / g : den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
}

RMatrix to_matrix(const RationalMatrix &m) {
    RMatrix out(static_cast<Eigen::Index>(m.size()), m.empty() ? 0 : static_cast<Eigen::Index>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            out(i, j) = m[i][j].value();
        }
    }
    return out;
}

const std::vector<std::string> &catalog_ids() {
    static const std::vector<std::string> ids = {"A", "B", "C", "D", "E", "D-appendix"};
    return ids;
}

const CatalogEntry &get_example(const std::string &id) {
    const auto &t = entries();
    const auto it = t.find(id);
    if (it == t.end()) {
        throw Error(ErrorCode::UnknownId, "no catalog entry '" + id + "'");
    }
    return it->second;
}

CMatrix exponential_family_state(const ExponentialFamilyModel &fam, const RVector &theta) {
    require_commuting(fam);
    if (theta.size() != static_cast<Eigen::Index>(fam.generators.size())) {
        throw Error(ErrorCode::DimensionMismatch, "theta has wrong length");
    }
    CMatrix x = CMatrix::Zero(fam.base_state.rows(), fam.base_state.cols());
    for (std::size_t j = 0; j < fam.generators.size(); ++j) {
        x += theta(static_cast<Eigen::Index>(j)) * fam.generators[j];
    }
    const CMatrix half = hermitian_exp(0.5 * x);
    const CMatrix s = half * fam.base_state * half;
    const double z = s.trace().real();
    return hermitian_part(s / z);
}

StatisticalModel exponential_family_model(const ExponentialFamilyModel &fam) {
    require_commuting(fam);
    StatisticalModel m;
    m.dim = static_cast<int>(fam.base_state.rows());
    m.num_params = static_cast<int>(fam.generators.size());
    m.rho = fam.base_state;
    for (const auto &g : fam.generators) {
        const Complex t = (fam.base_state * g).trace();
        m.drho.push_back(hermitian_part(0.5 * (g * fam.base_state + fam.base_state * g) - t.real() * fam.base_state));
    }
    m.label = "exponential-family";
    return m;
}

std::vector<CMatrix> exponential_family_fd_derivatives(const ExponentialFamilyModel &fam, double step) {
    std::vector<CMatrix> out;
    const auto n = static_cast<Eigen::Index>(fam.generators.size());
    for (Eigen::Index j = 0; j < n; ++j) {
        RVector tp = RVector::Zero(n), tm = RVector::Zero(n);
        tp(j) = step;
        tm(j) = -step;
        out.push_back((exponential_family_state(fam, tp) - exponential_family_state(fam, tm)) / (2.0 * step));
    }
    return out;
}

ExponentialFamilyModel example_c_family() {
    const CatalogEntry &c = get_example("C");
    return {c.model.rho, c.witnesses.front().operators};
}

}  // namespace qcrb
