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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "qcrb/json_io.h"
#include "qcrb/report.h"

using namespace qcrb;

namespace {

void schema(const Json &j, const std::string &path, std::set<std::string> &out) {
    if (j.is_object()) {
        out.insert(path + ": object");
        for (const auto &[k, v] : j.items()) {
            schema(v, path + "/" + k, out);
        }
    } else if (j.is_array()) {
        out.insert(path + ": array");
        for (const auto &v : j) {
            schema(v, path + "/*", out);
        }
    } else if (j.is_number()) {
        out.insert(path + ": number");
    } else {
        out.insert(path + ": " + std::string(j.type_name()));
    }
}

std::string schema_text(const Json &j) {
    std::set<std::string> lines;
    schema(j, "", lines);
    std::string s;
    for (const auto &l : lines) {
        s += l + "\n";
    }
    return s;
}

void check_golden(const std::string &name, const std::string &actual) {
    const std::filesystem::path file = std::filesystem::path(QCRB_GOLDEN_DIR) / (name + ".schema");
    if (std::getenv("QCRB_UPDATE_GOLDEN")) {
        std::ofstream(file) << actual;
        return;
    }
    std::ifstream in(file);
    ASSERT_TRUE(in) << "missing golden file " << file;
    const std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(actual, expected) << name;
}

}  // namespace

TEST(json, model_round_trip) {
    for (const auto &id : catalog_ids()) {
        const StatisticalModel &m = get_example(id).model;
        const StatisticalModel back = model_from_json(Json::parse(model_to_json(m).dump()));
        EXPECT_EQ(back.dim, m.dim);
        EXPECT_EQ(back.label, m.label);
        EXPECT_EQ((back.rho - m.rho).norm(), 0.0);
        for (int j = 0; j < m.num_params; ++j) {
            EXPECT_EQ((back.drho[j] - m.drho[j]).norm(), 0.0);
        }
    }
}

TEST(json, povm_round_trip) {
    const Povm &p = *get_example("D").povm;
    const Povm back = povm_from_json(Json::parse(povm_to_json(p).dump()));
    ASSERT_EQ(back.outcomes(), p.outcomes());
    for (int k = 0; k < p.outcomes(); ++k) {
        EXPECT_EQ((back.elements[k] - p.elements[k]).norm(), 0.0);
    }
}

TEST(json, matrix_encodings) {
    const CMatrix rows = matrix_from_json(Json::parse("[[[1,0],[0,2]],[[0,-2],[3,0]]]"), 2);
    EXPECT_EQ(rows(0, 1), Complex(0, 2));
    EXPECT_EQ(rows(1, 1), Complex(3, 0));
    const CMatrix flat = matrix_from_json(Json::parse("[[1,0],[0,2],[0,-2],[3,0]]"), 2);
    EXPECT_EQ((flat - rows).norm(), 0.0);
    const CMatrix real_rows = matrix_from_json(Json::parse("[[1,2],[2,3]]"), 2);
    EXPECT_EQ(real_rows(1, 0), Complex(2, 0));
    const CMatrix flat_real = matrix_from_json(Json::parse("[1,2,2,3]"), 2);
    EXPECT_EQ((flat_real - real_rows).norm(), 0.0);
    const CMatrix one = matrix_from_json(Json::parse("[[0.5]]"), 1);
    EXPECT_EQ(one(0, 0), Complex(0.5, 0));
    const CMatrix unknown = matrix_from_json(Json::parse("[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]"));
    EXPECT_EQ(unknown.rows(), 3);
}

TEST(json, parse_errors) {
    auto code_of = [](const std::string &text) {
        try {
            model_from_json(Json::parse(text));
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::EigFailure;
    };
    EXPECT_EQ(code_of("{}"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"dim": 2, "rho": [[1,0],[0]], "drho": []})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"dim": 2, "rho": [[1,0],[0,0]], "drho": [[["a",0],[0,0]],[[0,0],[0,0]]]})"),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"dim": 2, "num_params": 3, "rho": [[1,0],[0,0]], "drho": []})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"dim": 3, "rho": [1,0,0,1], "drho": []})"), ErrorCode::ParseError);
    EXPECT_THROW(parse_json_file("/nonexistent/model.json"), Error);
}

TEST(json, catalog_paths) {
    EXPECT_EQ(load_model("catalog:A").dim, 4);
    EXPECT_EQ(load_povm("catalog:D").dim, 8);
    EXPECT_THROW(load_povm("catalog:A"), Error);
    EXPECT_THROW(load_model("catalog:nope"), Error);
}

TEST(json, rationals) {
    const Json j = rational_to_json(Rational{22, 27});
    EXPECT_EQ(j["exact"], "22/27");
    EXPECT_DOUBLE_EQ(j["value"].get<double>(), 22.0 / 27.0);
}

TEST(json, floats_round_trip_exactly) {
    const double x = 60.0 / 91.0;
    EXPECT_EQ(Json::parse(Json(x).dump()).get<double>(), x);
}

TEST(report, golden_schemas) {
    for (const auto &id : catalog_ids()) {
        AnalysisOptions opt;
        opt.search_config.restarts = 4;
        opt.search_config.e_max = 2;
        const Json j = report_to_json(analyze_model(get_example(id).model, opt));
        check_golden("analyze_" + id, schema_text(j));
        EXPECT_EQ(j["sldcrb"].get<double>(), j["sldcrb"].get<double>());
    }
    const PovmEvaluation ev = povm_report(get_example("D").model, *get_example("D").povm);
    check_golden("povm_D", schema_text(ev.json));
    check_golden("catalog_list", schema_text(catalog_list_json()));
}

TEST(report, classification_consistency_recheck) {
    AnalysisReport rep = analyze_model(get_example("A").model, {});
    EXPECT_NO_THROW(report_to_json(rep));
    rep.classification = Classification::Attainable;
    EXPECT_THROW(report_to_json(rep), std::logic_error);
    rep = analyze_model(get_example("B").model, {});
    rep.theorem1->certificate.reset();
    rep.classification = Classification::CertifiedUnattainable;
    EXPECT_THROW(report_to_json(rep), std::logic_error);
}

TEST(report, non_finite_values_rejected) {
    Json j = {{"a", {1.0, std::nan("")}}};
    EXPECT_THROW(require_finite(j), std::logic_error);
    EXPECT_NO_THROW(require_finite(Json{{"a", 1.5}}));
}

TEST(report, example_values) {
    const Json a = report_to_json(analyze_model(get_example("A").model, {}));
    EXPECT_NEAR(a["sldcrb"].get<double>(), 60.0 / 91.0, 1e-12);
    EXPECT_EQ(a["classification"], "CertifiedUnattainable");
    EXPECT_TRUE(a["equality"]["cs_eq_ch"].get<bool>());
    EXPECT_TRUE(a["equality"]["cs_eq_cnh"].get<bool>());
    const Json b = report_to_json(analyze_model(get_example("B").model, {}));
    EXPECT_EQ(b["classification"], "Attainable");
    EXPECT_NEAR(b["povm_trace_inverse"].get<double>(), 1.0, 1e-8);
    EXPECT_NEAR(b["theorem1"]["theorem1"]["k"][1].get<double>(), 1.0, 1e-12);
}
