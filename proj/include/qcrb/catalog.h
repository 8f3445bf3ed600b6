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

#ifndef QCRB_CATALOG_H
#define QCRB_CATALOG_H

#include <optional>
#include <string>
#include <vector>

#include "qcrb/extension.h"
#include "qcrb/povm.h"

namespace qcrb {

struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

RMatrix to_matrix(const RationalMatrix &m);

/// Commuting extended SLDs given as full operators on the (d + e)-dimensional
/// space, in the same basis as the model.
struct StoredWitness {
    int ext_dim = 0;
    std::vector<CMatrix> operators;
};

struct CatalogEntry {
    std::string id;
    std::string description;
    StatisticalModel model;
    int rank = 0;
    RationalMatrix qfim;
    Rational sldcrb;
    bool sldcrb_derived = false;  // recomputed here, no published value
    Classification classification = Classification::Undetermined;
    std::vector<StoredWitness> witnesses;
    std::optional<Povm> povm;  // saturating measurement, possibly on an extended space
    std::optional<std::pair<double, double>> theorem1_scalars;
    std::vector<CMatrix> kernel_blocks;  // unique stage-ii solution, when known
};

const std::vector<std::string> &catalog_ids();

/// Throws UnknownId.
const CatalogEntry &get_example(const std::string &id);

struct ExponentialFamilyModel {
    CMatrix base_state;
    std::vector<CMatrix> generators;
};

/// exp(X/2 - psi/2) S0 exp(X/2 - psi/2) with X = sum theta_j G_j and
/// psi = log tr{S0 exp X}. Throws NonCommutingGenerators.
CMatrix exponential_family_state(const ExponentialFamilyModel &fam, const RVector &theta);

/// (S(0), dS/dtheta_j(0)) with dS_j = (G_j S0 + S0 G_j)/2 - tr{S0 G_j} S0.
StatisticalModel exponential_family_model(const ExponentialFamilyModel &fam);

/// Central differences of exponential_family_state at theta = 0.
std::vector<CMatrix> exponential_family_fd_derivatives(const ExponentialFamilyModel &fam, double step = 1e-4);

/// The family whose derivatives at the origin give entry C.
ExponentialFamilyModel example_c_family();

}  // namespace qcrb

#endif
