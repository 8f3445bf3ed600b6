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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcrb/report.h"

namespace py = pybind11;

namespace {

qcrb::StatisticalModel model_arg(const std::string &model) {
    if (model.rfind("catalog:", 0) == 0) {
        return qcrb::load_model(model);
    }
    return qcrb::model_from_json(qcrb::Json::parse(model));
}

}  // namespace

PYBIND11_MODULE(_qcrb, m) {
    m.doc() = "Cramer-Rao bound analysis for rank-deficient quantum models";
    py::register_exception<qcrb::Error>(m, "Error");
    py::register_exception<qcrb::Json::exception>(m, "JsonError", PyExc_ValueError);

    m.def("version", &qcrb::version);
    m.def("catalog_ids", &qcrb::catalog_ids);
    m.def("export_model", [](const std::string &id) { return qcrb::model_to_json(qcrb::get_example(id).model).dump(); });
    m.def("catalog_list", [] { return qcrb::catalog_list_json().dump(); });

    m.def(
        "analyze",
        [](const std::string &model, bool search, int e_max, int restarts, std::uint64_t seed, int max_iters) {
            qcrb::AnalysisOptions opt;
            opt.search = search;
            opt.search_config.e_max = e_max;
            opt.search_config.restarts = restarts;
            opt.search_config.seed = seed;
            opt.search_config.max_iters = max_iters;
            const qcrb::StatisticalModel mod = model_arg(model);
            py::gil_scoped_release release;
            return qcrb::report_to_json(qcrb::analyze_model(mod, opt)).dump();
        },
        py::arg("model"), py::arg("search") = true, py::arg("e_max") = -1, py::arg("restarts") = 32,
        py::arg("seed") = 0, py::arg("max_iters") = 2000);

    m.def(
        "povm_report",
        [](const std::string &model, const std::string &povm) {
            const qcrb::Povm p = povm.rfind("catalog:", 0) == 0 ? qcrb::load_povm(povm)
                                                                 : qcrb::povm_from_json(qcrb::Json::parse(povm));
            const qcrb::PovmEvaluation ev = qcrb::povm_report(model_arg(model), p);
            std::optional<std::string> code;
            if (ev.error) {
                code = qcrb::error_code_name(*ev.error);
            }
            return std::make_pair(ev.json.dump(), code);
        },
        py::arg("model"), py::arg("povm"));

    m.def(
        "optimize",
        [](const std::string &model, int outcomes, int restarts, std::uint64_t seed, long max_evals,
           const std::string &method) {
            qcrb::OptimizerConfig cfg;
            cfg.num_outcomes = outcomes;
            cfg.restarts = restarts;
            cfg.seed = seed;
            cfg.max_evals = max_evals;
            cfg.method = qcrb::parse_optimizer_method(method);
            const qcrb::StatisticalModel mod = model_arg(model);
            py::gil_scoped_release release;
            return qcrb::optimizer_to_json(mod, cfg, qcrb::optimize_povm(mod, cfg)).dump();
        },
        py::arg("model"), py::arg("outcomes") = 0, py::arg("restarts") = 32, py::arg("seed") = 0,
        py::arg("max_evals") = 0, py::arg("method") = "simplex");

    m.def(
        "qfim",
        [](const qcrb::CMatrix &rho, const std::vector<qcrb::CMatrix> &drho) {
            qcrb::StatisticalModel mod;
            mod.dim = static_cast<int>(rho.rows());
            mod.num_params = static_cast<int>(drho.size());
            mod.rho = rho;
            mod.drho = drho;
            const qcrb::DecomposedModel dm = qcrb::canonical_decompose(mod);
            const qcrb::RMatrix j = qcrb::qfim(dm, qcrb::compute_slds(dm));
            return std::make_pair(j, qcrb::sldcrb(j));
        },
        py::arg("rho"), py::arg("drho"));
}
