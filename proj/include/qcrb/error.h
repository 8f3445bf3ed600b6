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

#ifndef QCRB_ERROR_H
#define QCRB_ERROR_H

#include <stdexcept>
#include <string>

namespace qcrb {

enum class ErrorCode {
    NonHermitianInput,
    EigFailure,
    DimensionMismatch,
    InvalidModel,
    KernelDerivativeNonzero,
    SingularQfim,
    NotApplicable,
    ConfigInvalid,
    JointDiagonalizationFailed,
    SingularInformation,
    SingularCfi,
    NoFiniteObjective,
    UnknownId,
    NonCommutingGenerators,
    ParseError,
};

const char *error_code_name(ErrorCode code);

/// All library failures are reported through this exception type; `code()`
/// identifies the failure class so front ends can map it to exit codes.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace qcrb

#endif
