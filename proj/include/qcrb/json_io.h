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

#ifndef QCRB_JSON_IO_H
#define QCRB_JSON_IO_H

#include <string>

#include <json.hpp>

#include "qcrb/catalog.h"
#include "qcrb/povm.h"

namespace qcrb {

using Json = nlohmann::json;

/// Rows of [re, im] pairs. The reader also accepts plain real numbers as
/// entries and a flat row-major list of d*d entries.
Json to_json(const CMatrix &m);
Json to_json(const RMatrix &m);
Json to_json(const RVector &v);
CMatrix matrix_from_json(const Json &j, int dim = -1);

Json model_to_json(const StatisticalModel &m);
StatisticalModel model_from_json(const Json &j);

Json povm_to_json(const Povm &p);
Povm povm_from_json(const Json &j);

Json rational_to_json(const Rational &r);  // {"value": double, "exact": "num/den"}
Json rational_to_json(const RationalMatrix &m);

/// Reads a file, or resolves "catalog:<id>" to the built-in entry (for a
/// POVM, the entry's reference measurement). Throws ParseError or UnknownId.
StatisticalModel load_model(const std::string &path);
Povm load_povm(const std::string &path);

Json parse_json_file(const std::string &path);

}  // namespace qcrb

#endif
