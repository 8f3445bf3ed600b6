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

#include "qcrb/report.h"

#include <cmath>
#include <stdexcept>

namespace qcrb {

namespace {

constexpr double kWitnessTol = 1e-8;

Json norms_to_json(const BlockNorms &b) {
    return {{"ss", b.ss}, {"sk", b.sk}, {"kk", b.kk}, {"se", b.se}, {"ke", b.ke}, {"ee", b.ee}};
}

Json witness_to_json(const Witness &w) {
    Json ops = Json::array();
    for (const auto &l : w.slds) {
        ops.push_back(to_json(l.assemble()));
    }
    return {{"ext_dim", w.ext_dim()}, {"commutator_norm", w.commutator_norm}, {"operators", ops}};
}

Json summary_to_json(const SearchSummary &s) {
    return {{"stage", s.stage},
            {"restarts", s.restarts},
            {"max_iters", s.max_iters},
            {"seed", s.seed},
            {"best_residual", s.best_residual},
            {"ext_dims_tried", s.ext_dims_tried},
            {"best_residual_per_dim", s.best_residual_per_dim},
            {"iterations", s.iterations}};
}

Json config_to_json(const SearchConfig &c) {
    return {{"e_max", c.e_max},
            {"restarts", c.restarts},
            {"seed", c.seed},
            {"max_iters", c.max_iters},
            {"nonlinear", c.nonlinear}};
}

double povm_trace_inverse(const StatisticalModel &model, const Povm &povm) {
    return trace_inverse(classical_fisher(model, povm), 1e-12, ErrorCode::SingularCfi);
}

}  // namespace

const char *version() { return QCRB_VERSION; }

void require_finite(const Json &j, const std::string &where) {
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        throw std::logic_error("non-finite value at " + (where.empty() ? std::string("/") : where));
    }
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            require_finite(v, where + "/" + k);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            require_finite(j[i], where + "/" + std::to_string(i));
        }
    }
}

Json commutators_to_json(const CommutatorReport &c) {
    Json pairs = Json::array();
    for (const auto &p : c.pairs) {
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"norms", norms_to_json(p.norms)},
                         {"zero",
                          {{"ss", p.ss_zero}, {"sk", p.sk_zero}, {"kk", p.kk_zero},
                           {"se", p.se_zero}, {"ke", p.ke_zero}, {"ee", p.ee_zero}}},
                         {"all_zero", p.all_zero()}});
    }
    return {{"tol", c.tol}, {"pairs", pairs}};
}

Json attainability_to_json(const AttainabilityResult &r) {
    Json j = {{"classification", classification_name(r.classification)}};
    if (r.certificate) {
        Json c = {{"kind", certificate_name(r.certificate->kind)},
                  {"residual", r.certificate->residual},
                  {"detail", r.certificate->detail}};
        if (r.certificate->condition) {
            c["condition"] = theorem1_condition_name(*r.certificate->condition);
        }
        j["certificate"] = c;
    }
    if (r.witness) {
        j["witness"] = witness_to_json(*r.witness);
    }
    if (r.summary) {
        j["search"] = summary_to_json(*r.summary);
    }
    if (r.theorem1) {
        const auto &t = *r.theorem1;
        j["theorem1"] = {{"support_commutator_residual", t.support_commutator_residual},
                         {"commutator_rank", t.commutator_rank},
                         {"imaginary_overlap", t.imaginary_overlap},
                         {"span_residual", t.span_residual},
                         {"k", {t.k1, t.k2}}};
    }
    return j;
}

AnalysisReport analyze_model(const StatisticalModel &model, const AnalysisOptions &options) {
    const ValidationReport vr = validate(model);
    if (!vr.ok) {
        throw Error(ErrorCode::InvalidModel, vr.summary());
    }
    AnalysisReport rep;
    rep.options = options;
    rep.label = model.label;
    rep.num_params = model.num_params;
    const DecomposedModel dm = canonical_decompose(model, options.rank_tol);
    rep.dim = dm.canonical.dim;
    rep.rank = dm.rank();
    rep.basis = dm.space.basis();
    const std::vector<ExtendedSld> slds = compute_slds(dm);
    rep.qfim = qfim(dm, slds);
    rep.sldcrb = sldcrb(rep.qfim);
    rep.commutators = commutator_blocks(slds);
    rep.equality = equality_conditions(dm, slds);

    try {
        rep.theorem1 = check_theorem1(dm, slds);
    } catch (const Error &ex) {
        if (ex.code() != ErrorCode::NotApplicable) {
            throw;
        }
        rep.theorem1_note = ex.what();
    }
    if (options.search) {
        rep.search = search_witness(dm, options.search_config);
    }
    if (rep.theorem1) {
        rep.classification = rep.theorem1->classification;
        rep.classification_source = "theorem1";
        rep.witness = rep.theorem1->witness;
    } else if (rep.search) {
        rep.classification = rep.search->classification;
        rep.classification_source = "search";
        rep.witness = rep.search->witness;
    }
    if (rep.classification == Classification::Attainable && !rep.witness && rep.search && rep.search->witness) {
        rep.witness = rep.search->witness;
    }
    if (rep.witness) {
        rep.witness_commutators = commutator_blocks(rep.witness->slds);
        try {
            rep.povm = witness_to_povm(*rep.witness, dm, options.search_config.seed);
            rep.povm_trace_inverse = povm_trace_inverse(model, *rep.povm);
        } catch (const Error &ex) {
            rep.povm_note = ex.what();
        }
    }
    return rep;
}

Json report_to_json(const AnalysisReport &rep) {
    switch (rep.classification) {
        case Classification::Attainable:
            if (!rep.witness || rep.witness->commutator_norm > kWitnessTol ||
                max_commutator_norm(rep.witness->slds) > kWitnessTol) {
                throw std::logic_error("Attainable without a commuting witness");
            }
            break;
        case Classification::CertifiedUnattainable: {
            const auto &src = rep.classification_source == "theorem1" ? rep.theorem1 : rep.search;
            if (!src || !src->certificate) {
                throw std::logic_error("CertifiedUnattainable without a certificate");
            }
            break;
        }
        case Classification::Undetermined:
            if (rep.witness) {
                throw std::logic_error("Undetermined with a witness");
            }
            break;
    }
    Json j;
    j["tool"] = {{"name", "qcrb"}, {"version", version()}};
    j["label"] = rep.label;
    j["dim"] = rep.dim;
    j["rank"] = rep.rank;
    j["num_params"] = rep.num_params;
    j["qfim"] = to_json(rep.qfim);
    j["sldcrb"] = rep.sldcrb;
    j["commutators"] = commutators_to_json(rep.commutators);
    j["equality"] = {{"cs_eq_ch", rep.equality.cs_eq_ch},
                     {"cs_eq_cnh", rep.equality.cs_eq_cnh},
                     {"trace_residual", rep.equality.trace_residual},
                     {"trace_abs_residual", rep.equality.trace_abs_residual},
                     {"tol", rep.equality.tol},
                     {"trace_abs", "sum of |eigenvalues|"}};
    if (rep.theorem1) {
        j["theorem1"] = attainability_to_json(*rep.theorem1);
    } else {
        j["theorem1"] = {{"applicable", false}, {"reason", rep.theorem1_note}};
    }
    if (rep.search) {
        j["search"] = attainability_to_json(*rep.search);
    }
    j["classification"] = classification_name(rep.classification);
    j["classification_source"] = rep.classification_source;
    if (rep.witness) {
        j["witness"] = witness_to_json(*rep.witness);
        j["witness_commutators"] = commutators_to_json(*rep.witness_commutators);
    }
    j["canonical_basis"] = to_json(rep.basis);
    if (rep.povm) {
        j["povm"] = povm_to_json(*rep.povm);
    }
    if (rep.povm_trace_inverse) {
        j["povm_trace_inverse"] = *rep.povm_trace_inverse;
    }
    if (!rep.povm_note.empty()) {
        j["povm_note"] = rep.povm_note;
    }
    Json cfg = config_to_json(rep.options.search_config);
    cfg["search"] = rep.options.search;
    if (rep.options.rank_tol) {
        cfg["rank_tol"] = *rep.options.rank_tol;
    }
    j["config"] = cfg;
    j["seed"] = rep.options.search_config.seed;
    require_finite(j);
    return j;
}

Json extend_report(const StatisticalModel &model, const SearchConfig &config, std::optional<double> rank_tol) {
    const ValidationReport vr = validate(model);
    if (!vr.ok) {
        throw Error(ErrorCode::InvalidModel, vr.summary());
    }
    const DecomposedModel dm = canonical_decompose(model, rank_tol);
    const std::vector<ExtendedSld> slds = compute_slds(dm);
    Json j;
    j["tool"] = {{"name", "qcrb"}, {"version", version()}};
    j["label"] = model.label;
    j["dim"] = dm.canonical.dim;
    j["rank"] = dm.rank();
    const KernelBlockResult kb = solve_kernel_block(slds);
    Json linear;
    if (kb.solution) {
        Json blocks = Json::array();
        for (const auto &b : kb.solution->particular) {
            blocks.push_back(to_json(b));
        }
        linear = {{"feasible", true},
                  {"residual", kb.solution->residual},
                  {"kernel_blocks", blocks},
                  {"null_space_dim", kb.solution->homogeneous.size()}};
    } else {
        linear = {{"feasible", false},
                  {"certificate", certificate_name(kb.certificate->kind)},
                  {"residual", kb.certificate->residual}};
    }
    j["kernel_block"] = linear;
    j["search"] = attainability_to_json(search_witness(dm, config));
    j["config"] = config_to_json(config);
    j["seed"] = config.seed;
    require_finite(j);
    return j;
}

PovmEvaluation povm_report(const StatisticalModel &model, const Povm &input) {
    const ValidationReport vr = validate(model);
    if (!vr.ok) {
        throw Error(ErrorCode::InvalidModel, vr.summary());
    }
    PovmEvaluation out;
    Json &j = out.json;
    j["tool"] = {{"name", "qcrb"}, {"version", version()}};
    j["label"] = model.label;
    Povm povm = input;
    if (povm.dim > model.dim) {
        povm = naimark_truncate(povm, model.dim);
        j["truncated_from"] = input.dim;
    } else if (povm.dim < model.dim) {
        throw Error(ErrorCode::DimensionMismatch, "measurement dimension is smaller than the model dimension");
    }
    const PovmReport pr = validate_povm(povm);
    j["validation"] = {{"ok", pr.ok},
                       {"completeness_residual", pr.completeness_residual},
                       {"projective", pr.projective},
                       {"problems", pr.problems}};
    j["outcomes"] = povm.outcomes();
    const OutcomeStatistics st = outcome_statistics(model, povm);
    j["probabilities"] = to_json(st.probabilities);
    j["derivatives"] = to_json(st.derivatives);
    if (!pr.ok) {
        out.error = ErrorCode::DimensionMismatch;
        j["error"] = "invalid measurement";
        return out;
    }
    try {
        const RMatrix f = classical_fisher(model, povm);
        j["fisher"] = to_json(f);
        const double tr = trace_inverse(f, 1e-12, ErrorCode::SingularCfi);
        j["trace_inverse"] = tr;
        const EstimatorTable est = optimal_estimator(model, povm, f);
        j["estimator"] = {{"reference", to_json(est.reference)}, {"coefficients", to_json(est.coefficients)}};
        j["mse"] = to_json(mse_matrix(model, povm, est));
        const UnbiasednessResiduals ur = unbiasedness_residuals(model, povm, est);
        j["unbiasedness"] = {{"mean", ur.mean}, {"derivative", ur.derivative}};
    } catch (const Error &ex) {
        out.error = ex.code();
        j["error"] = ex.what();
    }
    require_finite(j);
    return out;
}

Json optimizer_to_json(const StatisticalModel &model, const OptimizerConfig &config, const OptimizerResult &r) {
    Json j;
    j["tool"] = {{"name", "qcrb"}, {"version", version()}};
    j["label"] = model.label;
    j["best_value"] = r.best_value;
    j["best_povm"] = povm_to_json(r.best_povm);
    j["restart_values"] = r.restart_values;
    j["restart_traces"] = r.restart_traces;
    j["min_evaluated"] = r.min_evaluated;
    j["evaluations"] = r.evaluations;
    try {
        const DecomposedModel dm = canonical_decompose(model);
        j["sldcrb"] = sldcrb(qfim(dm, compute_slds(dm)));
    } catch (const Error &) {
    }
    j["note"] = "upper bound on the most informative bound; a gap above sldcrb is evidence, not a certificate";
    j["config"] = {{"outcomes", r.num_outcomes},
                   {"restarts", config.restarts},
                   {"seed", config.seed},
                   {"max_evals", r.max_evals},
                   {"method", optimizer_method_name(config.method)}};
    j["seed"] = config.seed;
    require_finite(j);
    return j;
}

Json catalog_list_json() {
    Json out = Json::array();
    for (const auto &id : catalog_ids()) {
        const CatalogEntry &e = get_example(id);
        Json item = {{"id", e.id},
                     {"description", e.description},
                     {"dim", e.model.dim},
                     {"rank", e.rank},
                     {"num_params", e.model.num_params},
                     {"qfim", rational_to_json(e.qfim)},
                     {"sldcrb", rational_to_json(e.sldcrb)},
                     {"sldcrb_derived", e.sldcrb_derived},
                     {"classification", classification_name(e.classification)},
                     {"witnesses", e.witnesses.size()},
                     {"has_povm", e.povm.has_value()}};
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace qcrb
