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

#ifndef QCRB_REPORT_H
#define QCRB_REPORT_H

#include <optional>
#include <string>

#include "qcrb/extension.h"
#include "qcrb/json_io.h"
#include "qcrb/optimizer.h"

namespace qcrb {

const char *version();

struct AnalysisOptions {
    bool search = true;
    SearchConfig search_config;
    std::optional<double> rank_tol;
};

struct AnalysisReport {
    std::string label;
    int dim = 0, rank = 0, num_params = 0;
    RMatrix qfim;
    double sldcrb = 0.0;
    CommutatorReport commutators;
    EqualityConditions equality;
    std::optional<AttainabilityResult> theorem1;
    std::string theorem1_note;  // why it was skipped
    std::optional<AttainabilityResult> search;
    Classification classification = Classification::Undetermined;
    std::string classification_source = "none";
    std::optional<Witness> witness;
    std::optional<CommutatorReport> witness_commutators;
    std::optional<Povm> povm;  // original basis
    std::optional<double> povm_trace_inverse;
    std::string povm_note;
    CMatrix basis;  // canonical -> original
    AnalysisOptions options;
};

/// validate -> decompose -> SLDs -> QFIM/C_S -> commutators -> equality
/// conditions -> closed-form check -> witness search -> measurement.
AnalysisReport analyze_model(const StatisticalModel &model, const AnalysisOptions &options = {});

/// Throws std::logic_error when the classification disagrees with its
/// evidence or a numeric field is not finite.
Json report_to_json(const AnalysisReport &report);

Json attainability_to_json(const AttainabilityResult &r);
Json commutators_to_json(const CommutatorReport &c);

/// Kernel-block stage and witness search only.
Json extend_report(const StatisticalModel &model, const SearchConfig &config, std::optional<double> rank_tol = {});

struct PovmEvaluation {
    Json json;
    std::optional<ErrorCode> error;
};

/// Fisher matrix, Tr F^-1, estimator table, MSE and unbiasedness residuals.
/// POVMs on a larger space are truncated to the model dimension first. On a
/// numeric failure the partial report is returned together with the code.
PovmEvaluation povm_report(const StatisticalModel &model, const Povm &povm);

Json optimizer_to_json(const StatisticalModel &model, const OptimizerConfig &config, const OptimizerResult &r);

Json catalog_list_json();

/// Throws std::logic_error if a number in `j` is NaN or infinite.
void require_finite(const Json &j, const std::string &where = "");

}  // namespace qcrb

#endif
