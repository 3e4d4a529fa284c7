// Copyright 2026 The bssc Authors
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

#include "bssc/error.h"

namespace bssc {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Singular:
            return "Singular";
        case ErrorCode::RankDeficient:
            return "RankDeficient";
        case ErrorCode::NotSymplectic:
            return "NotSymplectic";
        case ErrorCode::NotInvertible:
            return "NotInvertible";
        case ErrorCode::NotSymmetric:
            return "NotSymmetric";
        case ErrorCode::NotIsotropic:
            return "NotIsotropic";
        case ErrorCode::DependentRows:
            return "DependentRows";
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::InsufficientSupport:
            return "InsufficientSupport";
        case ErrorCode::EmptySupport:
            return "EmptySupport";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::ConfigError:
            return "ConfigError";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {
}

}  // namespace bssc
