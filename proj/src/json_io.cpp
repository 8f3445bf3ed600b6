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

#include "qcrb/json_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qcrb {

namespace {

constexpr const char *kCatalogPrefix = "catalog:";

Complex entry_from_json(const Json &e) {
    if (e.is_number()) {
        return {e.get<double>(), 0.0};
    }
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        return {e[0].get<double>(), e[1].get<double>()};
    }
    throw Error(ErrorCode::ParseError, "matrix entry must be a number or [re, im]: " + e.dump());
}

bool is_entry(const Json &e) {
    return e.is_number() || (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number());
}

template <typename T>
T field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
    }
    try {
        return j.at(name).get<T>();
    } catch (const Json::exception &ex) {
        throw Error(ErrorCode::ParseError, std::string("field '") + name + "': " + ex.what());
    }
}

std::optional<std::string> catalog_id(const std::string &path) {
    if (path.rfind(kCatalogPrefix, 0) == 0) {
        return path.substr(std::string(kCatalogPrefix).size());
    }
    return std::nullopt;
}

}  // namespace

Json to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const RMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const RVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

CMatrix matrix_from_json(const Json &j, int dim) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorCode::ParseError, "matrix must be a non-empty array");
    }
    const auto count = static_cast<long>(j.size());
    bool flat = false;
    if (dim > 1) {
        flat = count == static_cast<long>(dim) * dim;
    } else if (dim == 1) {
        flat = is_entry(j.front());
    } else {
        flat = std::any_of(j.begin(), j.end(), [&](const Json &row) {
            return !row.is_array() || static_cast<long>(row.size()) != count;
        });
    }
    if (flat) {
        const long side = std::lround(std::sqrt(static_cast<double>(count)));
        if (side * side != count || (dim > 0 && side != dim)) {
            throw Error(ErrorCode::ParseError, "flat matrix has " + std::to_string(count) + " entries");
        }
        CMatrix m(side, side);
        for (long k = 0; k < count; ++k) {
            m(k / side, k % side) = entry_from_json(j[k]);
        }
        return m;
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.front().is_array() ? j.front().size() : 0);
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json &row = j[i];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw Error(ErrorCode::ParseError, "ragged matrix row " + std::to_string(i));
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(i, c) = entry_from_json(row[c]);
        }
    }
    if (dim > 0 && (rows != dim || cols != dim)) {
        throw Error(ErrorCode::ParseError, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    return m;
}

Json model_to_json(const StatisticalModel &m) {
    Json drho = Json::array();
    for (const auto &s : m.drho) {
        drho.push_back(to_json(s));
    }
    return {{"dim", m.dim}, {"num_params", m.num_params}, {"label", m.label}, {"rho", to_json(m.rho)}, {"drho", drho}};
}

StatisticalModel model_from_json(const Json &j) {
    StatisticalModel m;
    m.dim = field<int>(j, "dim");
    if (m.dim < 1) {
        throw Error(ErrorCode::ParseError, "dim must be positive");
    }
    m.rho = matrix_from_json(field<Json>(j, "rho"), m.dim);
    const Json drho = field<Json>(j, "drho");
    if (!drho.is_array()) {
        throw Error(ErrorCode::ParseError, "drho must be an array of matrices");
    }
    for (const auto &s : drho) {
        m.drho.push_back(matrix_from_json(s, m.dim));
    }
    m.num_params = j.contains("num_params") ? field<int>(j, "num_params") : static_cast<int>(m.drho.size());
    if (m.num_params != static_cast<int>(m.drho.size())) {
        throw Error(ErrorCode::ParseError, "num_params does not match the number of derivatives");
    }
    if (j.contains("label")) {
        m.label = field<std::string>(j, "label");
    }
    return m;
}

Json povm_to_json(const Povm &p) {
    Json elements = Json::array();
    for (const auto &e : p.elements) {
        elements.push_back(to_json(e));
    }
    return {{"dim", p.dim}, {"elements", elements}};
}

Povm povm_from_json(const Json &j) {
    Povm p;
    p.dim = field<int>(j, "dim");
    if (p.dim < 1) {
        throw Error(ErrorCode::ParseError, "dim must be positive");
    }
    const Json elements = field<Json>(j, "elements");
    if (!elements.is_array() || elements.empty()) {
        throw Error(ErrorCode::ParseError, "elements must be a non-empty array");
    }
    for (const auto &e : elements) {
        p.elements.push_back(matrix_from_json(e, p.dim));
    }
    return p;
}

Json rational_to_json(const Rational &r) { return {{"value", r.value()}, {"exact", r.str()}}; }

Json rational_to_json(const RationalMatrix &m) {
    Json rows = Json::array();
    for (const auto &row : m) {
        Json out = Json::array();
        for (const auto &x : row) {
            out.push_back(rational_to_json(x));
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

Json parse_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error &ex) {
        throw Error(ErrorCode::ParseError, path + ": " + ex.what());
    }
}

StatisticalModel load_model(const std::string &path) {
    if (const auto id = catalog_id(path)) {
        return get_example(*id).model;
    }
    return model_from_json(parse_json_file(path));
}

Povm load_povm(const std::string &path) {
    if (const auto id = catalog_id(path)) {
        const CatalogEntry &e = get_example(*id);
        if (!e.povm) {
            throw Error(ErrorCode::UnknownId, "catalog entry '" + *id + "' has no reference measurement");
        }
        return *e.povm;
    }
    return povm_from_json(parse_json_file(path));
}

}  // namespace qcrb
