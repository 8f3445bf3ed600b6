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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qcrb/report.h"

namespace {

using qcrb::ErrorCode;

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::UnknownId:
            return 1;
        case ErrorCode::InvalidModel:
        case ErrorCode::ConfigInvalid:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::NonHermitianInput:
        case ErrorCode::KernelDerivativeNonzero:
        case ErrorCode::NotApplicable:
            return 2;
        default:
            return 3;
    }
}

void emit(const qcrb::Json &j, const std::string &out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) {
        throw qcrb::Error(ErrorCode::ParseError, "cannot write '" + out + "'");
    }
    f << j.dump(2) << "\n";
}

void add_search_flags(CLI::App *cmd, qcrb::SearchConfig &cfg) {
    cmd->add_option("--e-max", cfg.e_max, "largest extension dimension tried (default: d)");
    cmd->add_option("--restarts", cfg.restarts, "random restarts per extension dimension");
    cmd->add_option("--seed", cfg.seed, "base seed");
    cmd->add_option("--max-iters", cfg.max_iters, "iterations per restart");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cramer-Rao bound analysis for rank-deficient multiparameter quantum models"};
    app.set_version_flag("--version", qcrb::version());
    app.require_subcommand(1);
    std::string out;

    std::string model_path;
    qcrb::AnalysisOptions analysis;
    bool no_search = false;
    double rank_tol = 0.0;
    auto *analyze = app.add_subcommand("analyze", "full report for a model");
    analyze->add_option("model", model_path, "model JSON file or catalog:<id>")->required();
    analyze->add_flag("--no-search", no_search, "skip the witness search");
    add_search_flags(analyze, analysis.search_config);
    analyze->add_option("--rank-tol", rank_tol, "eigenvalues at or below this are treated as zero");
    analyze->add_option("--out", out, "write the report here instead of stdout");

    qcrb::SearchConfig extend_cfg;
    auto *extend = app.add_subcommand("extend", "kernel-block solve and witness search");
    extend->add_option("model", model_path, "model JSON file or catalog:<id>")->required();
    add_search_flags(extend, extend_cfg);
    extend->add_option("--rank-tol", rank_tol, "eigenvalues at or below this are treated as zero");
    extend->add_option("--out", out, "output file");

    std::string povm_path;
    auto *povm = app.add_subcommand("povm", "evaluate a measurement on a model");
    povm->add_option("model", model_path, "model JSON file or catalog:<id>")->required();
    povm->add_option("povm", povm_path, "POVM JSON file or catalog:<id>")->required();
    povm->add_option("--out", out, "output file");

    qcrb::OptimizerConfig opt_cfg;
    std::string method = "simplex";
    auto *optimize = app.add_subcommand("optimize", "search rank-1 POVMs for the smallest Tr F^-1");
    optimize->add_option("model", model_path, "model JSON file or catalog:<id>")->required();
    optimize->add_option("--outcomes", opt_cfg.num_outcomes, "number of outcomes M (default: d + 2)");
    optimize->add_option("--restarts", opt_cfg.restarts, "random restarts");
    optimize->add_option("--seed", opt_cfg.seed, "base seed");
    optimize->add_option("--max-evals", opt_cfg.max_evals, "objective evaluations per restart");
    optimize->add_option("--method", method, "simplex or fdgrad")->check(CLI::IsMember({"simplex", "fdgrad"}));
    optimize->add_option("--out", out, "output file");

    std::string export_id;
    auto *catalog = app.add_subcommand("catalog", "built-in models");
    catalog->require_subcommand(1);
    auto *list = catalog->add_subcommand("list", "entries with reference values");
    auto *exp = catalog->add_subcommand("export", "model JSON of one entry");
    exp->add_option("id", export_id, "entry id")->required();
    exp->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            analysis.search = !no_search;
            if (analyze->count("--rank-tol")) {
                analysis.rank_tol = rank_tol;
            }
            const qcrb::StatisticalModel m = qcrb::load_model(model_path);
            emit(qcrb::report_to_json(qcrb::analyze_model(m, analysis)), out);
        } else if (extend->parsed()) {
            std::optional<double> tol;
            if (extend->count("--rank-tol")) {
                tol = rank_tol;
            }
            emit(qcrb::extend_report(qcrb::load_model(model_path), extend_cfg, tol), out);
        } else if (povm->parsed()) {
            const qcrb::StatisticalModel m = qcrb::load_model(model_path);
            const qcrb::PovmEvaluation ev = qcrb::povm_report(m, qcrb::load_povm(povm_path));
            emit(ev.json, out);
            if (ev.error) {
                std::cerr << "qcrb: " << ev.json.value("error", std::string("measurement evaluation failed")) << "\n";
                return exit_code(*ev.error);
            }
        } else if (optimize->parsed()) {
            opt_cfg.method = qcrb::parse_optimizer_method(method);
            const qcrb::StatisticalModel m = qcrb::load_model(model_path);
            emit(qcrb::optimizer_to_json(m, opt_cfg, qcrb::optimize_povm(m, opt_cfg)), out);
        } else if (list->parsed()) {
            emit(qcrb::catalog_list_json(), out);
        } else if (exp->parsed()) {
            emit(qcrb::model_to_json(qcrb::get_example(export_id).model), out);
        }
    } catch (const qcrb::Error &e) {
        std::cerr << "qcrb: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception &e) {
        std::cerr << "qcrb: internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
