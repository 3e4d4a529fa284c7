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

#ifndef BSSC_VERIFY_H
#define BSSC_VERIFY_H

#include <functional>
#include <string>
#include <vector>

namespace bssc {

/// quick: exhaustive m <= 2 plus sampled m <= 6. full: exhaustive m <= 3 and
/// the m = 4 decode roundtrip over the whole codebook.
enum class VerifyLevel { Quick, Full };

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

std::vector<std::string> check_names();

/// Runs every invariant check in order and reports each one as it finishes.
std::vector<CheckResult> run_checks(
    VerifyLevel level, const std::function<void(const CheckResult &)> &report = {});

}  // namespace bssc

#endif
