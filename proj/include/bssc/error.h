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

#ifndef BSSC_ERROR_H
#define BSSC_ERROR_H

#include <stdexcept>
#include <string>

namespace bssc {

enum class ErrorCode {
    Singular,
    RankDeficient,
    NotSymplectic,
    NotInvertible,
    NotSymmetric,
    NotIsotropic,
    DependentRows,
    LengthMismatch,
    InsufficientSupport,
    EmptySupport,
    DimensionMismatch,
    ConfigError,
    ParseError,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can tell the cases apart without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what);
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace bssc

#endif
